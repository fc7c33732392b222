import dataclasses
import json
from fractions import Fraction as F

import pytest

from darboux.curvefunc import CurveFunction, RadicalFunction, expand_at_base, radical_divisor
from darboux.errors import BasePointError, ClassificationError, FieldExtensionNeeded
from darboux.evaluations import (Catalog, covering_series, derive_contiguous,
                                 load_catalog, reconstruct_ratio, tidy, verify, verify_all)
from darboux.hypergeom import HpgParams


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


def test_fptetra1_rhs_expansion(catalog):
    rec = catalog.get("fptetra1")
    s = expand_at_base(rec.rhs, 2)
    assert [s.coefficient(k) for k in range(3)] == [1, F(1, 2), F(5, 8)]
    assert verify(rec, 10).ok


def test_mutated_exponent_fails_at_first_coefficient(catalog):
    rec = catalog.get("fptetra1")
    bad = dataclasses.replace(rec, rhs=RadicalFunction(None, 1, [(rec.rhs.factors[0][0], F(-1, 2))]))
    rep = verify(bad, 10)
    assert not rep.ok and rep.mismatch_index == 1
    assert rep.to_dict() == {"id": "fptetra1", "ok": False, "order": 10, "mismatch_index": 1}


def test_elliptic_mismatch_index_in_sqrt_units(catalog):
    rec = catalog.get("icosellipta")
    bad = dataclasses.replace(rec, rhs=rec.rhs * F(2))
    assert verify(bad, 6).mismatch_index == 0


def test_round_trip_is_exact(catalog, tmp_path):
    path = tmp_path / "cat.json"
    catalog.save(path)
    again = load_catalog(path)
    assert again.to_dict() == catalog.to_dict()
    raw = json.loads((catalog.path).read_text())
    assert again.to_dict()["records"] == raw["records"]


def test_records_carry_consistent_types(catalog):
    assert len(catalog) == 56
    assert all(rec.check_type() for rec in catalog)


def test_verify_all_follows_catalog(catalog):
    sub = Catalog([r for r in catalog if r.covering in ("tetra4", "octa6b")][:5])
    reps = verify_all(8, sub, workers=2)
    assert [r.id for r in reps] == [r.id for r in sub]
    assert all(r.ok for r in reps)


def test_env_variable_selects_catalog(catalog, tmp_path, monkeypatch):
    path = tmp_path / "small.json"
    Catalog(list(catalog)[:-1]).save(path)
    monkeypatch.setenv("DARBOUX_CATALOG", str(path))
    assert len(load_catalog()) == 55
    assert len(load_catalog(catalog.path)) == 56


def test_zero_shift_returns_base(catalog):
    rec = catalog.get("fptetra1")
    assert derive_contiguous(rec.params, rec) is rec


def test_derive_fptetra1a_ratio(catalog):
    base = catalog.get("fptetra1")
    rec = derive_contiguous(HpgParams(F(5, 4), F(-1, 12), F(5, 3)), base)
    x = CurveFunction.x(None)
    ratio = (1 + x) / (1 + x / 4) ** 2
    assert expand_at_base(rec.rhs, 12) == expand_at_base(base.rhs * ratio, 12)
    assert rec.id == "fptetra1@5/4,-1/12,5/3" and rec.notes == "derived from fptetra1"


def test_reconstruct_fptetra1z_ratio(catalog):
    base = catalog.get("fptetra1")
    G = reconstruct_ratio(HpgParams(F(1, 4), F(-5, 12), F(1, 3)), base)
    x = CurveFunction.x(None)
    assert G == (1 + F(5, 2) * x) / (1 - 2 * x)


def test_type_mismatch_is_rejected(catalog):
    with pytest.raises(ClassificationError):
        derive_contiguous(HpgParams(F(1, 4), F(-1, 12), F(3, 5)), catalog.get("fptetra1"))


def test_covering_must_vanish_at_base():
    with pytest.raises(BasePointError):
        covering_series("tetra6", 4)


def test_tidy_merges_factors_and_rejects_irrational_constants():
    x = CurveFunction.x(None)
    r = RadicalFunction(None, 1, [(1 - 2 * x, F(1, 2)), (2 - 4 * x, F(1, 2))])
    with pytest.raises(FieldExtensionNeeded):
        tidy(r)
    r = RadicalFunction(None, 1, [(1 - 2 * x, F(1, 2)), (4 - 8 * x, F(1, 2))])
    t = tidy(r)
    assert t.constant == 2 and len(t.factors) == 1


def test_radical_divisor_of_rhs_has_expected_fractional_part(catalog):
    D = radical_divisor(catalog.get("fptetra1").rhs)
    assert sorted(D.coeffs.values()) == [F(-1, 4), F(1, 4)]
