# Ordered partitions, the faces they cut out, and the flip distance to coherence.
from monopath import OrderedPartition, enumerate_proper_partitions, flip_neighbors, incoherency
from monopath.coherence import is_coherent_subdivision
from monopath.subdivisions import atoms_below, face_census, max_incoherency_census, refines, subdivision_faces
from monopath.words import LambdaWord

rho = OrderedPartition.parse("1|1,2|2|1,2|1", (4, 3))
for face in subdivision_faces(rho):
    print("  base", face.base, "spans", face.directions)

atoms = atoms_below(rho)
print([str(a) for a in atoms])
print("coherent:", [str(a) for a in atoms if is_coherent_subdivision(a).coherent])
print(all(refines(a, rho) for a in atoms))

print(len(list(enumerate_proper_partitions((2, 1)))), "proper partitions for (2,1)")
print("census (2,2,2):", face_census((2, 2, 2)))

w = LambdaWord.parse("1212")
print(w, "->", [str(u) for u in flip_neighbors(w)])
for text in ["12121", "1221", "123321"]:
    print(text, "incoherency", incoherency(LambdaWord.parse(text)))

for d in (2, 3, 4):
    best, attainers = max_incoherency_census(d)
    print(f"d={d}: max {best}, {len(attainers)} words attain it")
