import json

import numpy as np
import pytest
import scipy.linalg

from conftest import random_complex
from numrad.catalog import (
    DEFAULT_EQ_TOL,
    DEFAULT_TOL,
    Kind,
    Signature,
    Status,
    evaluate_chain,
    evaluate_relation,
    get_relation,
    list_relations,
    registry_json,
)
from numrad.catalog.approx import Approx, maximum, sqrt
from numrad.catalog.evaluate import check_link, combine_status
from numrad.catalog.registry import Relation, Term
from numrad.errors import (
    PreconditionError,
    RelationKindError,
    SignatureMismatchError,
    UnknownRelationError,
)
from numrad.harness import draw_trial_inputs
from numrad.harness.ensembles import random_unitary


def modulus(m):
    """|m| from scipy's general matrix square root, independent of the package."""
    return scipy.linalg.sqrtm(m.conj().T @ m).real if np.isrealobj(m) else scipy.linalg.sqrtm(m.conj().T @ m)


# -- registry ------------------------------------------------------------------------


def test_registry_has_37_entries_in_order():
    rels = list_relations()
    assert [r.id for r in rels] == [f"R{i:02d}" for i in range(1, 38)]
    assert list_relations() == rels  # immutable, same every call


def test_registry_lookups():
    r06 = get_relation("R06")
    assert r06.signature is Signature.MATRIX_PAIR and r06.kind is Kind.BOUND
    r24 = get_relation("r24")
    assert r24.precondition == "accretive_dissipative" and r24.kind is Kind.EQUALITY
    with pytest.raises(UnknownRelationError):
        get_relation("R38")


def test_registry_shape_invariants():
    for rel in list_relations():
        assert len(rel.links) == len(rel.terms) - 1
        if rel.kind is Kind.BOUND:
            assert len(rel.terms) == 2
        elif rel.kind is Kind.CHAIN:
            assert len(rel.terms) >= 3
        else:
            assert set(rel.links) == {"=="}
        assert rel.signature in (Signature.SINGLE_MATRIX, Signature.MATRIX_PAIR)
        assert rel.description and rel.title


def test_relation_constructor_rejects_bad_shapes():
    t = Term("x", lambda c, a: Approx(1.0))
    with pytest.raises(ValueError):
        Relation("R99", "t", Signature.SINGLE_MATRIX, Kind.BOUND, "none", (t, t, t), ("<=", "<="), "d")
    with pytest.raises(ValueError):
        Relation("R99", "t", Signature.SINGLE_MATRIX, Kind.CHAIN, "none", (t, t), ("<=",), "d")


def test_imaginary_modulus_reading_is_documented():
    assert "Im T" in get_relation("R27").description


def test_registry_json_is_stable():
    doc = json.loads(registry_json())
    assert len(doc) == 37
    assert set(doc[0]) == {"id", "kind", "signature", "precondition", "terms", "links", "description", "anchor"}
    assert registry_json() == registry_json()


# -- approximate arithmetic -------------------------------------------------------------


def test_approx_error_propagation():
    a, b = Approx(2.0, 0.1), Approx(3.0, 0.2)
    assert (a + b).err == pytest.approx(0.3)
    assert (a - b).value == -1.0 and (a - b).err == pytest.approx(0.3)
    prod = a * b
    assert prod.value == 6.0 and prod.err == pytest.approx(2 * 0.2 + 3 * 0.1 + 0.02)
    sq = a**2
    assert sq.value == 4.0 and sq.err >= (2.1**2 - 4.0) - 1e-12
    r = sqrt(Approx(4.0, 0.4))
    assert r.value == 2.0 and r.err >= 2.0 - np.sqrt(3.6)
    assert sqrt(Approx(-1e-18)).value == 0.0
    assert maximum(a, b).value == 3.0 and maximum(a, b).err == pytest.approx(0.2)
    assert (a / 2).err == pytest.approx(0.05)
    with pytest.raises(ValueError):
        a / b
    with pytest.raises(ValueError):
        a**0.3


def test_approx_intervals_contain_perturbed_results(rng):
    # every propagated bound must cover the worst case of perturbed inputs
    for _ in range(200):
        x, y = rng.uniform(0.1, 5, 2)
        ex, ey = rng.uniform(0, 0.1, 2)
        ax, ay = Approx(x, ex), Approx(y, ey)
        for _ in range(5):
            px, py = x + rng.uniform(-ex, ex), y + rng.uniform(-ey, ey)
            for got, exact in [
                (ax * ay, px * py),
                (ax**3, px**3),
                (sqrt(ax), np.sqrt(px)),
                (ax - ay, px - py),
            ]:
                assert abs(got.value - exact) <= got.err + 1e-12


# -- link judgement -----------------------------------------------------------------------


def test_check_link_inequality_bands():
    tol = 1e-9
    assert check_link(Approx(1.0), "<=", Approx(2.0), tol, 0)[3] is Status.SATISFIED
    # within tolerance
    assert check_link(Approx(1.0 + 5e-10), "<=", Approx(1.0), tol, 0)[3] is Status.SATISFIED
    # short by more than the tolerance but within the accuracy band
    assert check_link(Approx(1.0 + 1e-6, 1e-5), "<=", Approx(1.0), tol, 0)[3] is Status.INCONCLUSIVE
    # short by more than tolerance plus accuracy
    slack, allowance, acc, status = check_link(Approx(1.1, 1e-5), "<=", Approx(1.0, 1e-5), tol, 0)
    assert status is Status.VIOLATED and slack == pytest.approx(-0.1) and acc == pytest.approx(2e-5)
    assert allowance == pytest.approx(2e-9)


def test_check_link_equality():
    assert check_link(Approx(1.0), "==", Approx(1.0 + 5e-7), 1e-9, 1e-6)[3] is Status.SATISFIED
    assert check_link(Approx(1.0, 1e-5), "==", Approx(1.0 + 5e-6), 1e-9, 1e-6)[3] is Status.SATISFIED
    slack, _, _, status = check_link(Approx(1.0), "==", Approx(1.1), 1e-9, 1e-6)
    assert status is Status.VIOLATED and slack == pytest.approx(-0.1)


def test_combine_status():
    S, V, I = Status.SATISFIED, Status.VIOLATED, Status.INCONCLUSIVE
    assert combine_status([S, S]) is S
    assert combine_status([S, I]) is I
    assert combine_status([I, V, S]) is V


# -- evaluation examples ----------------------------------------------------------------------


def test_r06_printed_example():
    a = np.array([[2, 3], [1, 0]])
    b = np.array([[2, 2], [5, 3]])
    rep = evaluate_relation("R06", [a, b])
    assert rep.status is Status.SATISFIED
    assert rep.value("bound") == pytest.approx(47.0005, abs=1e-3)
    assert rep.tolerance_used == DEFAULT_TOL and rep.eq_tolerance_used == DEFAULT_EQ_TOL


def test_r01_identity():
    rep = evaluate_relation("R01", np.eye(2))
    assert [v for _, v in rep.term_values] == pytest.approx([0.5, 1.0, 1.0], abs=1e-12)
    assert rep.status is Status.SATISFIED
    assert rep.slack == pytest.approx(0.0, abs=1e-9)


def test_r12_printed_example():
    rep = evaluate_relation("R12", [np.array([[1, 0], [1, 0]])])
    assert rep.value("bound") == pytest.approx(1.60355, abs=1e-5)
    assert rep.status is Status.SATISFIED


def test_r27_chain_on_normal_matrix():
    t = np.diag([1 + 1j, 0])
    rep = evaluate_chain("R27", t)
    assert rep.status is Status.SATISFIED
    assert all(link.status is Status.SATISFIED for link in rep.links)
    assert rep.value("half_norm") == pytest.approx(np.sqrt(2) / 2)
    assert rep.value("omega") == pytest.approx(np.sqrt(2), abs=1e-10)


def test_r21_chain_is_nondecreasing():
    rep = evaluate_chain("R21", np.array([[1, 1], [0, 1]]))
    values = [v for _, v in rep.term_values]
    assert len(values) == 4
    assert all(b >= a - 1e-9 for a, b in zip(values, values[1:]))
    assert rep.status is Status.SATISFIED
    # omega([[1,1],[0,1]]) = 3/2: the numerical range is a disc of radius 1/2 about 1
    assert values[0] == pytest.approx(2.25, abs=1e-9)


def test_r23_chain_on_identities():
    eye = np.eye(2)
    rep = evaluate_chain("R23", [eye, eye])
    assert rep.value("omega_e") == pytest.approx(np.sqrt(2), abs=1e-10)
    assert rep.value("norm_e") == pytest.approx(np.sqrt(2), abs=1e-10)
    assert rep.status is Status.SATISFIED


def test_evaluate_chain_rejects_non_chains():
    with pytest.raises(RelationKindError):
        evaluate_chain("R06", [np.eye(2), np.eye(2)])


def test_evaluation_errors():
    with pytest.raises(UnknownRelationError):
        evaluate_relation("R00", [np.eye(2)])
    with pytest.raises(SignatureMismatchError):
        evaluate_relation("R06", [np.eye(2)])
    with pytest.raises(SignatureMismatchError):
        evaluate_relation("R01", [np.eye(2), np.eye(2)])
    with pytest.raises(SignatureMismatchError):
        evaluate_relation("R06", [np.eye(2), np.eye(3)])
    with pytest.raises(PreconditionError):
        evaluate_relation("R25", [np.array([[1, 0], [4, 1]])])
    with pytest.raises(PreconditionError):
        evaluate_relation("R05", [np.array([[0, 1], [0, 0]]), np.eye(2)])


def test_report_serialization_and_digest():
    a = np.array([[1, 2], [0, 4]])
    rep = evaluate_relation("R02", a)
    again = evaluate_relation("R02", a.astype(complex))
    assert rep.inputs_digest == again.inputs_digest
    assert rep.to_dict() == again.to_dict()
    assert evaluate_relation("R02", a.T).inputs_digest != rep.inputs_digest
    d = rep.to_dict()
    assert d["status"] == "Satisfied" and d["relation_id"] == "R02"
    json.dumps(d)


# -- term values against independent formulas ----------------------------------------------------


def test_modulus_sum_term_matches_scipy(rng):
    t = random_complex(rng, 3)
    rep = evaluate_relation("R02", t)
    direct = 0.5 * np.linalg.norm(modulus(t) + modulus(t.conj().T), 2)
    assert rep.value("half_norm_abs_sum") == pytest.approx(direct, rel=1e-9)


def test_block_identity_terms_agree(rng):
    a, b = random_complex(rng, 3), random_complex(rng, 3)
    rep = evaluate_relation("R31", [a, b])
    assert rep.value("block_omega_direct") == pytest.approx(rep.value("block_omega_sweep"), abs=1e-9)
    half = 0.5 * (np.linalg.norm(a, 2) + np.linalg.norm(b, 2))
    assert rep.value("half_norm_sum") == pytest.approx(half, rel=1e-12)


def test_normal_equalities(rng):
    u = random_unitary(rng, 3)
    t = (u * (rng.standard_normal(3) + 1j * rng.standard_normal(3))) @ u.conj().T
    rep = evaluate_relation("R25", t)
    assert rep.status is Status.SATISFIED
    assert rep.value("norm") == pytest.approx(np.linalg.norm(t, 2), rel=1e-12)


# -- scale covariance ----------------------------------------------------------------------------


@pytest.mark.parametrize("rid", [f"R{i:02d}" for i in range(1, 21)])
def test_status_is_scale_invariant(rid):
    rel = get_relation(rid)
    for k in range(3):
        mats, _, _ = draw_trial_inputs(rid, k, (2, 3), seed=11)
        c = float(np.random.default_rng(k).uniform(0.1, 10))
        base = evaluate_relation(rid, mats)
        scaled = evaluate_relation(rid, [c * m for m in mats])
        assert base.status is scaled.status is Status.SATISFIED, rel.id
        assert np.sign(round(base.slack, 9)) == np.sign(round(scaled.slack, 9))
