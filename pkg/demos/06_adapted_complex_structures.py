# Adapted almost complex structures on g1 (n = 2): none of them is integrable.
import random

from liecurv.catalog import g1
from liecurv.complex_structures import (
    adapted_sampling_integrability,
    compatibility_check,
    integrability_check,
    random_adapted,
    standard_adapted,
)
from liecurv.foliation import FoliationSplit

alg = g1(2)
split = FoliationSplit(alg, ["X2", "X3"])

j = standard_adapted(split)
res = integrability_check(alg, j)
print("integrable:", res.ok, "first failing pair:", [alg.labels[i] for i in res.witness])
print("compatible with B:", compatibility_check(j, split).ok)

# on a 2-dimensional fibre the only choices are +-J0; with n = 4 the
# vertical part is a genuinely rotated complex structure
big = g1(4)
big_split = FoliationSplit(big, ["X2", "X3", "X4", "X5"])
j = random_adapted(big_split, random.Random(4))
print("random adapted J on", big.name, "columns are J e_k:")
for row in j.matrix:
    print("  ", "  ".join(f"{str(x):>8}" for x in row))

rep = adapted_sampling_integrability(alg, split, samples=100, seed=0)
print(f"{rep.integrable} of {rep.samples} integrable;",
      f"N_J(W,X3) = J[W,JX3] in {rep.reduction_holds}, nonzero in {rep.nonzero}")

rep = adapted_sampling_integrability(big, big_split, samples=100, seed=0)
print(f"{big.name}: {rep.integrable} of {rep.samples} integrable")
