# The deformed braid arrangement: characteristic polynomial, regions, faces, cosets.
import os
import tempfile

from monopath import build_arrangement, char_poly_closed, char_poly_finite_field, region_count
from monopath.arrangements import catalan_face_count, coset_map, distinct_coordinate_cosets, poly_eval
from monopath.plot import plot_slice
from monopath.words import LambdaWord, enumerate_words, is_non_nesting

for parts in [(2, 2, 2), (3, 2, 1), (1, 1, 1)]:
    arr = build_arrangement(parts)
    poly = char_poly_closed(parts)
    print(parts, len(arr), "hyperplanes, chi =", poly, " regions =", region_count(parts))

# brute force over (Z/q)^d agrees with the product formula
lam = (2, 2, 2)
for q in [7, 11, 13]:
    print(f"  q={q}: grid count {char_poly_finite_field(lam, q)}, formula {poly_eval(char_poly_closed(lam), q)}")

print("Catalan arrangement faces by dimension:",
      {k: catalan_face_count(3, k) for k in (3, 2, 1)})

labels = {coset_map(w) for w in enumerate_words(lam) if is_non_nesting(w)}
print(len(labels), "distinct first-position cosets;",
      labels == distinct_coordinate_cosets(6, 3))
print("112 ->", coset_map(LambdaWord.parse("112")))

out = os.path.join(tempfile.gettempdir(), "catalan_slice.svg")
with open(out, "w") as fh:
    fh.write(plot_slice(lam))
print("wrote", out)
