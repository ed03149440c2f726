from itertools import product
from math import gcd

import pytest

from lensfill.cfrac import enumerate_zero_cf, hj_expand
from lensfill.errors import (
    ClosureViolated,
    InvalidSpin,
    TerminalRelationViolated,
)
from lensfill.exact import continuant
from lensfill.homology import (
    gamma_filling,
    gamma_standard,
    is_valid_spin,
    mu_basis,
    rotation_numbers,
    spin_structures,
)


def coprime_pairs(pmax):
    for p in range(2, pmax + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def chain(p, q):
    return hj_expand(p, p - q)


def test_mu_basis_examples():
    assert mu_basis((2, 2, 2), 4).coeffs == (1, 2, 3)
    assert mu_basis((2,), 2).coeffs == (1,)
    assert mu_basis((2, 2, 2, 3), 9).coeffs == (1, 2, 3, 4)


def test_mu_basis_rejects_mismatched_p():
    with pytest.raises(ClosureViolated):
        mu_basis((2, 2, 2), 5)


def test_mu_basis_closure_sweep():
    # the recursion closes and the chain determinant equals p, every pair
    for p, q in coprime_pairs(2000):
        b = chain(p, q)
        mb = mu_basis(b, p)  # closure and determinant asserted inside
        assert mb.coeffs[0] == 1
        assert continuant(b) == p


def test_mu_last_coefficient_measured_relation():
    # measured, not part of the contract: q * c_k = -1 mod p on the +b chain
    for p, q in coprime_pairs(200):
        mb = mu_basis(chain(p, q), p)
        assert (q * mb.coeffs[-1]) % p == p - 1


def test_spin_structures_examples():
    assert spin_structures((2, 2, 2), 4) == [(0, 0, 0), (1, 0, 1)]
    assert spin_structures((2,), 2) == [(0,), (1,)]
    only = spin_structures((2, 2, 2, 3), 9)
    assert len(only) == 1
    # brute force over all bit vectors agrees
    brute = [s for s in product((0, 1), repeat=4) if is_valid_spin((2, 2, 2, 3), s)]
    assert only == brute


def test_spin_structures_brute_force_small_k():
    # integrality of the invariant coefficients == the parity condition,
    # checked on every bit vector for every chain of length <= 8
    for p, q in coprime_pairs(40):
        b = chain(p, q)
        if len(b) > 8:
            continue
        brute = [s for s in product((0, 1), repeat=len(b)) if is_valid_spin(b, s)]
        assert spin_structures(b, p) == brute
        for s in brute:
            gamma_filling(b, s)  # must not raise
        for s in product((0, 1), repeat=len(b)):
            if s not in brute:
                with pytest.raises(InvalidSpin):
                    gamma_filling(b, s)


def test_spin_structure_counts():
    for p, q in coprime_pairs(500):
        b = chain(p, q)
        assert len(spin_structures(b, p)) == 2 - p % 2


def test_gamma_filling_examples():
    assert gamma_filling((2, 2, 2), (0, 0, 0)) == 1
    assert gamma_filling((2, 2, 2), (1, 0, 1)) == 3
    with pytest.raises(InvalidSpin):
        gamma_filling((2, 2, 2), (1, 1, 1))
    with pytest.raises(InvalidSpin):
        gamma_filling((2, 2, 2), (0, 0))


def test_gamma_standard_examples():
    assert gamma_standard((2, 2, 2), (0, 0, 0)) == 1
    assert gamma_standard((2,), (0,)) == gamma_filling((2,), (0,))
    assert gamma_standard((2,), (1,)) == gamma_filling((2,), (1,))
    b = (2, 2, 2, 3)
    (s,) = spin_structures(b, 9)
    assert gamma_standard(b, s) == gamma_filling(b, s)


def test_gamma_equality_sweep():
    for p, q in coprime_pairs(60):
        b = chain(p, q)
        for s in spin_structures(b, p):
            assert gamma_filling(b, s) == gamma_standard(b, s), (p, q, s)


def test_rotation_examples():
    assert rotation_numbers((1, 1)) == (0, 1)
    assert rotation_numbers((2, 1, 2)) == (0, 1, 1)
    assert rotation_numbers((1, 2, 1)) == (0, 1, 2)
    assert rotation_numbers((0,)) == (0,)
    with pytest.raises(ValueError):
        rotation_numbers((2, 2))


def test_rotation_terminal_relation_exhaustive():
    cases = 0
    for k in range(2, 11):
        for n in enumerate_zero_cf(k):
            r = rotation_numbers(n)  # terminal relation asserted inside
            assert len(r) == k and r[0] == 0 and r[1] == 1
            cases += 1
    assert cases == sum(len(enumerate_zero_cf(k)) for k in range(2, 11))


def test_rotation_rejects_non_zero_tuples():
    with pytest.raises(ValueError):
        rotation_numbers((2, 2, 2))
