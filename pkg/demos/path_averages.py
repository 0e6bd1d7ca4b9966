"""Average points of lifted paths and the zonotope they sit in."""
from monopath import LambdaWord, lifted_path, path_integral, swap_difference, zonotope_generators
from monopath.geometry import on_upper_hyperplane, upper_facet_paths, vertex_certificate, word_integral
from monopath.words import Composition, enumerate_words, is_non_nesting


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


w = LambdaWord.parse("112233")
print("lifted heights:", [p[-1] for p in lifted_path(w).points])
print("I(112233) =", fmt(path_integral(lifted_path(w))))
print("I(121233) =", fmt(word_integral(LambdaWord.parse("121233"))))
print("swap at position 2 moves I by", fmt(swap_difference(w, 2)))

lam = Composition((2, 2, 2))
spec = zonotope_generators(lam)
print(len(spec.generators), "generators, vertical summand s =", spec.s, ", scale", spec.scale)

for sigma, I in upper_facet_paths(lam):
    print("  upper path", sigma, fmt(I), on_upper_hyperplane(lam, I))

coherent = [u for u in enumerate_words(lam) if is_non_nesting(u)]
print(sum(vertex_certificate(u) for u in coherent), "of", len(coherent), "coherent words certified as vertices")
