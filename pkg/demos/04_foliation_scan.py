# Try every coordinate subalgebra of codimension two and classify its foliation.
from liecurv.catalog import nikonorov4, nikonorov5
from liecurv.foliation import FoliationSplit, coordinate_subalgebra_scan, oneill_a, oneill_identity_check

for alg in (nikonorov5(), nikonorov4()):
    print(alg.name)
    for c in coordinate_subalgebra_scan(alg):
        if not c.subalgebra:
            continue
        v = ",".join(alg.labels[i] for i in c.vertical)
        tags = [k for k, on in c.flags().items() if on and k != "subalgebra"]
        print(f"  {{{v}}}: {' '.join(tags) or '-'}")

# the conformal foliation with totally geodesic fibres on the second example
alg = nikonorov4()
split = FoliationSplit(alg, ["A", "X3", "X4"])
a = oneill_a(split)
print("V(grad ln lambda) =", {alg.labels[k]: str(c) for k, c in enumerate(a.gradient) if c})
ids = oneill_identity_check(split)
print("curvature identities:", ids.identity_ii, ids.identity_iii, "on", ids.identity_ii_checked + ids.identity_iii_checked, "components")
