"""The word-problem oracle: braids acting on the free group.

Each braid generator rewrites the free generators x_1 .. x_n; the action is
faithful, so comparing images decides equality of braid words outright.
"""

import random

import lanterns as L
from lanterns.braids import BraidWord


def show(word, images):
    def fmt(img):
        return "".join(f"x{k}" if k > 0 else f"x{-k}'" for k in img) or "1"

    print(f"  {list(word.letters)} acts by:",
          ", ".join(f"x{j} -> {fmt(img)}" for j, img in enumerate(images, 1)))


sigma1 = BraidWord(3, (1,))
show(sigma1, L.artin_image(sigma1))

u = BraidWord(3, (1, 2, 1))
v = BraidWord(3, (2, 1, 2))
print("\nbraid relation s1 s2 s1 = s2 s1 s2:")
show(u, L.artin_image(u))
show(v, L.artin_image(v))
print("  equal:", L.braids_equal(u, v))

print("\nthe full twist is central:")
delta_sq = L.full_twist_block(4, 1, 4)
rng = random.Random(0)
word = BraidWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(12)))
print("  random w:", list(word.letters))
print("  w * D^2 == D^2 * w:", L.braids_equal(word * delta_sq, delta_sq * word))

print("\nevery braid fixes the boundary word x1 x2 ... xn:")
print("  image of x1..x4 under w:", L.boundary_word_image(word))

print("\ncheap invariants reject fast, only the oracle ever accepts:")
a, b = BraidWord(3, (1,)), BraidWord(3, (-1,))
print("  s1 vs s1^-1:", L.braids_equal(a, b), "(exponent sums differ)")
c = BraidWord(3, (1, 2))
print("  s1 vs s1 s2:", L.braids_equal(a, c), "(permutations differ)")
