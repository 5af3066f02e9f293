"""Draw the named families as static SVG files under demos/output/."""

from pathlib import Path

import lanterns as L

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

gallery = {
    "lantern": L.validate_arrangement([(2, 0), (1, 1), (-1, 4)]),
    "pencil5": L.make_pencil(5),
    "daisy6": L.make_daisy(6),
    "doubled_daisy5": L.make_doubled_daisy(5),
    "wajnryb4": L.realize_wajnryb(4),
}

for name, arr in gallery.items():
    path = out / f"{name}.svg"
    path.write_text(L.render_arrangement_svg(arr))
    print(f"wrote {path} ({arr.n} lines, {len(L.intersections(arr))} points)")
