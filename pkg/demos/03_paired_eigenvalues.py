# Does the curvature operator have enough repeated eigenvalues?
# If a harmonic morphism with totally geodesic fibres to a surface existed,
# deg gcd(f, f') would have to be at least dim - 2.
from liecurv.catalog import nikonorov4, nikonorov5
from liecurv.obstruction import paired_eigenvalue_test

for alg in (nikonorov5(), nikonorov4()):
    r = paired_eigenvalue_test(alg)
    print(alg.name)
    print("  f   =", r.charpoly)
    print("  gcd =", r.gcd)
    print("  verdict:", r.verdict, "--", r.reason)
    for value, mult in r.spectrum:
        print(f"    {value:+.12f}  x{mult}")
