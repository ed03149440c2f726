"""Classifying the minimal symplectic fillings of a lens space.

With p/(p-q) = [b_1, ..., b_k], the minimal fillings of L(p, q)
correspond to the admissible zero tuples n bounded entrywise by b.  Two
of them give diffeomorphic manifolds only when q is self-inverse mod p
and the tuples are reverses of each other.
"""

from lensfill import (
    classify,
    invariants,
    make_params,
    minimal_filling_family,
    rational_ball_criterion,
    uniqueness_predicate,
    zset,
)

# L(4, 1) is the classical exceptional case: the disk bundle and the
# complement of a conic give two distinct fillings.
pr = make_params(4, 1)
print("L(4,1) fillings:", zset(pr), "->", len(classify(pr)), "classes")

# L(p, 1) for p != 4 has a single filling class:
for p in (5, 6, 17):
    print(f"L({p},1):", len(classify(make_params(p, 1))), "class")

# The square family L(m^2, m-1) always has exactly two fillings; the
# second is a rational homology ball (second Betti number zero), the
# piece used in rational blowdown surgery.
for m in (3, 4, 5):
    pr = make_params(m * m, m - 1)
    descs = [invariants(pr, n) for n in zset(pr)]
    print(
        f"L({m*m},{m-1}): fillings",
        [d.n for d in descs],
        "with b2 =",
        [d.b2 for d in descs],
        "witness:",
        rational_ball_criterion(m * m, m - 1),
    )

# When the expansion of p/q has all entries >= 5, the filling is unique:
print("24/5 = [5,5]; unique filling certified:", uniqueness_predicate(24, 5))
print("Z_{24,5} =", zset(make_params(24, 5)))

# A lens space with many homotopy-distinct minimal fillings: the family
# below realizes consecutive Euler characteristics.
pr = make_params(89, 34)
for r in (0, 1):
    n = minimal_filling_family(pr, r)
    print(f"L(89,34), r={r}: n={n}, chi={invariants(pr, n).chi}")
