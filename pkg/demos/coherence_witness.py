"""Deciding coherence by a system of difference constraints.

A word is coherent exactly when some generic linear functional picks it out.
The solver either returns a rational functional or a cycle of constraints
that cannot all hold.
"""
from monopath import LambdaWord, is_coherent_path, word_of_functional
from monopath.coherence import delta_sequence, path_coherence_system

w = LambdaWord.parse("12121")
print(path_coherence_system(w).constraints[:4], "...")

verdict = is_coherent_path(w)
c = verdict.functional
print("coherent:", verdict.coherent)
print("witness a' =", [str(x) for x in c.aprime])
print("functional coefficients =", [str(x) for x in c.coefficients()])

# increments along the lifted path are strictly increasing for the witness
print("increments:", [str(x) for x in delta_sequence(w, c)])
print("sorting the letters by value gives back", word_of_functional(c, w.composition))

bad = LambdaWord.parse("12211")
verdict = is_coherent_path(bad)
print("\n12211 coherent:", verdict.coherent)
for edge in verdict.result.certificate:
    print("   ", edge)

# ordered partitions go through the same solver
from monopath import OrderedPartition, is_coherent_subdivision

for text, lam in [("1|1,2", (2, 1)), ("1,2|1,2", (2, 2)), ("1|1,2|2|1,2|1", (4, 3))]:
    v = is_coherent_subdivision(OrderedPartition.parse(text, lam))
    print(f"{text:>16}  coherent={v.coherent}  dimension={v.dimension}")
