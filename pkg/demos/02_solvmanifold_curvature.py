# Curvature operator of a 5-dimensional Einstein solvmanifold, entry by entry.
from liecurv.algebra import einstein_check
from liecurv.catalog import nikonorov5, catalog_basis
from liecurv.linalg import format_matrix
from liecurv.wedge import curvature_operator

alg = nikonorov5()
print(alg.labels)

# Levi-Civita connection straight from the brackets (Koszul formula)
x1 = alg.index("X1")
v = alg.nabla(alg.e(x1), alg.e(x1))
print("nabla_X1 X1 =", {alg.labels[k]: str(c) for k, c in enumerate(v) if c})

print("Ricci diagonal:", [str(alg.ricci[i][i]) for i in range(alg.n)])
res = einstein_check(alg)
print("Einstein:", res.einstein, "constant", res.constant)

# ordering of the exterior basis used by the reference operator matrix
basis = catalog_basis("nikonorov5")
q = curvature_operator(alg, basis)
print([f"{alg.labels[i]}^{alg.labels[j]}" for i, j in basis.pairs])
for row in format_matrix(q.matrix):
    print("  ".join(f"{x:>14}" for x in row))
print("symmetric:", q.is_symmetric())
