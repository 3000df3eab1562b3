"""Multiplicity identities: support, worked instance, bounds, lifts."""

import pytest

from bmlocal.bm_mult import (
    SerreTuple,
    bm_identity,
    bm_multiplicities,
    candidate_support,
    is_steinberg,
)
from bmlocal.errors import BoundViolated, IrregularHodgeType
from bmlocal.weights import EmbeddingData, HodgeType, tilde_lift


def _mu(p, e, f, weights_list):
    emb = EmbeddingData.standard(p, e, f)
    ws = dict(zip(emb.embeddings, weights_list))
    return HodgeType(weights=ws, embedding_data=emb)


def test_worked_instance_p5_e2():
    mu = _mu(5, 2, 1, [(2, 0), (2, 0)])
    ident = bm_identity(mu)
    got = {st.components[0][1]: (m, lift) for st, m, lift in ident.terms}
    assert set(got) == {(2, 0), (1, 1)}
    m20, lift20 = got[(2, 0)]
    m11, lift11 = got[(1, 1)]
    assert m20 == 1 and m11 == 1
    # tilde lifts: lam + rho at the distinguished embedding, rho elsewhere
    assert sorted(lift20.weights.values()) == [(1, 0), (3, 0)]
    assert sorted(lift11.weights.values()) == [(1, 0), (2, 1)]
    assert ident.steinberg_flags == ()


def test_support_matches_multiplicities():
    mu = _mu(5, 2, 1, [(2, 0), (2, 0)])
    support = candidate_support(mu)
    mults = bm_multiplicities(mu)
    assert set(mults) <= set(support)
    assert {st.components[0][1] for st in support} == {(2, 0), (1, 1)}


def test_identity_of_a_lift_is_a_single_term():
    # the multiplicity identity of tilde(lam) contains lam with
    # multiplicity one and nothing else
    emb = EmbeddingData.standard(5, 2, 1)
    for lam in [(1, 0), (2, 0), (3, 0), (2, 1)]:
        mu = tilde_lift({0: lam}, emb)
        ident = bm_identity(mu)
        assert len(ident.terms) == 1
        st, m, lift = ident.terms[0]
        assert st.components[0][1] == lam and m == 1
        assert lift.weights == mu.weights


def test_multiplicities_positive_and_bounded():
    mu = _mu(7, 3, 1, [(2, 0), (2, 0), (2, 0)])
    mults = bm_multiplicities(mu)
    assert all(m > 0 for m in mults.values())
    # total dimension bookkeeping: sum over terms of m * prod dim(lam)
    from bmlocal.characters import weyl_dim

    lhs = 1
    for w in mu.weights.values():
        lhs *= weyl_dim((w[0] - 1, w[1]))
    rhs = sum(
        m * weyl_dim(st.components[0][1]) for st, m in mults.items()
    )
    assert lhs == rhs


def test_steinberg_detection():
    st = SerreTuple(components=((0, (4, 0)),), p=5)
    assert is_steinberg(st, 5)
    st2 = SerreTuple(components=((0, (3, 0)),), p=5)
    assert not is_steinberg(st2, 5)


def test_bound_refusals():
    with pytest.raises(BoundViolated):
        bm_identity(_mu(5, 2, 1, [(6, 0), (2, 0)]))  # theorem-A bound
    with pytest.raises(IrregularHodgeType):
        bm_identity(_mu(5, 2, 1, [(1, 1), (2, 0)]))  # not regular
    with pytest.raises(BoundViolated):
        bm_multiplicities(_mu(3, 2, 1, [(4, 0), (3, 0)]))  # natural bound


def test_serre_tuple_gap_validation():
    emb = EmbeddingData.standard(3, 1, 1)
    with pytest.raises(ValueError):
        SerreTuple.from_dict({0: (5, 0)}, emb)  # gap 5 > p - 1 = 2
