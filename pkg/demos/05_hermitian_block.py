# On a split that the curvature operator preserves, the mixed block
# X^U, Y^U carries a complex structure. When R commutes with it every
# eigenvalue on that block comes twice.
from liecurv.catalog import nikonorov4, nikonorov5
from liecurv.foliation import FoliationSplit
from liecurv.polynomials import numeric_spectrum
from liecurv.wedge import block_split, curvature_operator, hermitian_W_check, theta_independence_check

alg = nikonorov4()
q = curvature_operator(alg)
split = FoliationSplit(alg, ["A", "X3", "X4"])
print("invariant:", block_split(q, split.vertical).invariant)
print("theta-independent:", theta_independence_check(q, split.vertical).holds)

h = hermitian_W_check(q, split.vertical)
print("commutes with J:", h.commutes)
print("det R|W =", h.det_restricted, " det H =", h.det_hermitian)
print("charpoly(R|W) = charpoly(H)^2:", h.square_identity_holds)
print("spectrum on W:", numeric_spectrum(h.restricted))

# the same test fails on the other example
alg = nikonorov5()
split = FoliationSplit(alg, ["X2", "X3", "X4"])
th = theta_independence_check(curvature_operator(alg), split.vertical)
print(alg.name, "theta-independent:", th.holds, [str(v) for v in th.values])
