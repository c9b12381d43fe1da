from fractions import Fraction

import pytest

from jacobsthal import Form, SequenceKind
from jacobsthal.identities import (
    ERRATA,
    IDENTITIES,
    IdentityId,
    check_cassini_j,
    check_cassini_lucas,
    check_catalan_j,
    check_catalan_lucas,
    check_column_vector,
    check_commutation,
    check_convolution_j,
    check_convolution_lucas,
    check_docagne_j,
    check_docagne_lucas,
    check_interterms,
    check_sum,
    run_identity,
    sweep,
)

from conftest import naive_terms

P, C = Form.PAPER_LITERAL, Form.CORRECTED
J, L = SequenceKind.JACOBSTHAL, SequenceKind.JACOBSTHAL_LUCAS


def _lr(rep):
    return rep.lhs, rep.rhs, rep.passed


@pytest.mark.parametrize(
    "rep, expected",
    [
        (lambda: check_catalan_j(2, 3, 1, C), (-4, -4, True)),
        (lambda: check_catalan_j(2, 3, 1, P), (-4, 4, False)),
        (lambda: check_catalan_j(7, 9, 0, P), (0, 0, True)),
        (lambda: check_catalan_j(7, 9, 0, C), (0, 0, True)),
        (lambda: check_catalan_lucas(2, 3, 2, C), (-16, -16, True)),
        (lambda: check_catalan_lucas(2, 3, 2, P), (-16, -64, False)),
        (lambda: check_catalan_lucas(3, 2, 1, C), (-48, -48, True)),
        (lambda: check_cassini_j(3, 4), (27, 27, True)),
        (lambda: check_cassini_lucas(2, 2), (-16, -16, True)),
        (lambda: check_cassini_j(2, 1), (-1, -1, True)),
        (lambda: check_docagne_j(2, 3, 1), (-2, -2, True)),
        (lambda: check_docagne_lucas(2, 2, 1), (16, 16, True)),
        (lambda: check_docagne_j(5, 6, 6), (0, 0, True)),
        (lambda: check_convolution_j(3, 2, 3, C), (61, 61, True)),
        (lambda: check_convolution_j(3, 2, 3, P), (61, 46, False)),
        (lambda: check_convolution_j(2, 2, 2, C), (5, 5, True)),
        (lambda: check_convolution_j(2, 2, 2, P), (5, 5, True)),
        (lambda: check_convolution_lucas(2, 2, 2), (22, 22, True)),
        (lambda: check_convolution_lucas(3, 3, 2), (242, 242, True)),
        (lambda: check_convolution_lucas(9, 1, 0), (2, 2, True)),
        (lambda: check_interterms(3, 4, "A"), (82, 82, True)),
        (lambda: check_interterms(3, 4, "B"), (26, 26, True)),
        (lambda: check_interterms(6, 1, "A"), (2, 2, True)),
        (lambda: check_sum(3, 4, J), (30, 30, True)),
        (lambda: check_sum(2, 2, L), (10, 10, True)),
        (lambda: check_sum(8, 0, J), (0, 0, True)),
    ],
)
def test_examples(rep, expected):
    assert _lr(rep()) == expected


def test_column_vector_and_commutation():
    assert _lr(check_column_vector(3, 5)) == ((730, 242), (730, 242), True)
    rep = check_commutation(10)
    assert rep.passed and rep.lhs == (19, 10, 1, 10)
    assert rep.instance.indices == ()


@pytest.mark.parametrize(
    "call",
    [
        lambda: check_catalan_j(2, 3, 4),
        lambda: check_catalan_lucas(2, 1, 2),
        lambda: check_cassini_j(2, 0),
        lambda: check_cassini_lucas(2, 0),
        lambda: check_docagne_j(2, 3, 4),
        lambda: check_docagne_lucas(2, 3, 4),
        lambda: check_convolution_j(2, 0, 3),
        lambda: check_convolution_lucas(2, 0, 3),
        lambda: check_interterms(2, 0, "A"),
        lambda: check_interterms(2, 3, "C"),
        lambda: check_column_vector(2, 0),
        lambda: check_sum(1, 3, J),
        lambda: check_sum(3, -1, J),
    ],
)
def test_preconditions(call):
    with pytest.raises(ValueError):
        call()


def test_inexact_sum_division_is_reported_not_raised(monkeypatch):
    from jacobsthal import identities

    real = identities._binet_term

    def shifted(kind, k, n):
        return real(kind, k, n) + (1 if n == 3 else 0)

    monkeypatch.setattr(identities, "_binet_term", shifted)
    rep = check_sum(3, 2, J)
    assert not rep.passed
    assert isinstance(rep.rhs, Fraction)


def test_report_carries_stated_domain():
    assert check_cassini_j(3, 1).stated_domain == "n >= 2"
    assert check_convolution_j(3, 1, 1).stated_domain == "m, n >= 2"


def test_registry_covers_every_identity():
    assert set(IDENTITIES) == set(IdentityId)
    assert ERRATA == {IdentityId.CATALAN_J, IdentityId.CATALAN_LUCAS, IdentityId.CONVOLUTION_J}
    assert run_identity(IdentityId.DOCAGNE_J, 2, C, (3, 1)).lhs == -2


@pytest.mark.parametrize("k", range(2, 13))
def test_catalan_at_r1_is_cassini(k):
    for n in range(1, 41):
        assert check_catalan_j(k, n, 1, C).rhs == check_cassini_j(k, n).rhs
        assert check_catalan_lucas(k, n, 1, C).rhs == check_cassini_lucas(k, n).rhs


def test_correct_identities_identical_in_both_forms():
    for id_ in set(IdentityId) - ERRATA:
        spec = IDENTITIES[id_]
        for idx in list(spec.domain(6)):
            a, b = spec.check(4, P, *idx), spec.check(4, C, *idx)
            assert (a.lhs, a.rhs) == (b.lhs, b.rhs)


# -- sweeps -----------------------------------------------------------------


def test_sweep_cassini_count():
    rep = sweep([IdentityId.CASSINI_J], range(2, 6), 30, [P])
    assert rep.checks == 120
    assert rep.failures == []
    assert rep.passed


def _oracle_catalan_j_paper_failures(ks, bound):
    out = []
    for k in ks:
        t = naive_terms(J, k, 2 * bound + 2)
        for n in range(bound + 1):
            for r in range(n + 1):
                lhs = t[n + r] * t[n - r] - t[n] ** 2
                rhs = (-1) ** (n - r) * k ** (n - r) * t[r] ** 2
                if lhs != rhs:
                    out.append((k, n, r))
    return out


def test_sweep_catalan_paper_failure_set_matches_oracle():
    rep = sweep([IdentityId.CATALAN_J], range(2, 6), 20, [P])
    got = [(f.instance.k, *(v for _, v in f.instance.indices)) for f in rep.failures]
    want = _oracle_catalan_j_paper_failures(range(2, 6), 20)
    assert got == want
    # the printed sign is wrong whenever J(r) != 0, i.e. for every r >= 1
    assert all(r >= 1 for _, _, r in got)
    assert len(got) == 4 * sum(n for n in range(21))
    first = rep.entry(IdentityId.CATALAN_J, P).first_counterexample
    assert (first.instance.k, first.instance.index_map()) == (2, {"n": 1, "r": 1})
    assert (2, 3, 1) in got


def test_sweep_convolution_j_k2_paper_only_passes_on_coincidences():
    rep = sweep([IdentityId.CONVOLUTION_J], [2], 12, [P, C])
    assert rep.entry(IdentityId.CONVOLUTION_J, C).passed
    t = naive_terms(J, 2, 30)
    for f in rep.entry(IdentityId.CONVOLUTION_J, P).failures:
        m, n = f.instance.index_map()["m"], f.instance.index_map()["n"]
        assert t[m - 1] * (t[n] - t[n - 1]) != 0
    passing = rep.entry(IdentityId.CONVOLUTION_J, P).checks - len(rep.entry(IdentityId.CONVOLUTION_J, P).failures)
    want = sum(1 for m in range(1, 13) for n in range(1, 13) if t[m - 1] * (t[n] - t[n - 1]) == 0)
    assert passing == want


def test_sweep_is_deterministic():
    a = sweep(list(IdentityId), range(2, 5), 8, [P, C])
    b = sweep(reversed(list(IdentityId)), [4, 3, 2], 8, [C, P])
    key = lambda rep: [(f.instance, f.form, f.lhs, f.rhs) for f in rep.failures]  # noqa: E731
    assert key(a) == key(b)
    assert [(e.id, e.form) for e in a.entries] == [(e.id, e.form) for e in b.entries]


def test_sweep_rejects_empty():
    with pytest.raises(ValueError):
        sweep([], range(2, 4), 5)
    with pytest.raises(ValueError):
        sweep([IdentityId.SUM_J], [], 5)
