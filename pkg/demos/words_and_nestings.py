# Lambda-permutations, nestings, and how many words avoid them.
from math import factorial

from monopath import Composition, LambdaWord, enumerate_words, is_non_nesting, nesting_count, word_to_path
from monopath.words import multinomial_count, nesting_quadruples

lam = Composition((2, 2, 2))
print("lambda =", lam, " n =", lam.n, " d =", lam.d)

# a word is a path: letter i means one step along e_i
w = LambdaWord.parse("121233")
print(w, "->", word_to_path(w).points)

# 1221: the 2-pair sits inside the 1-pair with no 1 between them
for text in ["12121", "12211", "123321"]:
    u = LambdaWord.parse(text)
    print(f"{text:>8}  non-nesting={is_non_nesting(u)!s:5}  nestings={nesting_count(u)}  quads={nesting_quadruples(u)}")

words = list(enumerate_words(lam))
good = [u for u in words if is_non_nesting(u)]
print(len(words), "words,", len(good), "non-nesting")
print("closed form n!/(n-d+1)! =", factorial(lam.n) // factorial(lam.n - lam.d + 1))
print("multinomial check:", multinomial_count(lam) == len(words))
