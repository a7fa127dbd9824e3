"""Harness-level tests: certificate shapes, verdict consistency, verifiers."""

import numpy as np
import pytest

from tdzcert import (
    Annihilator,
    CertificateMalformedError,
    CertificationReport,
    InputError,
    NumericError,
    OperatorMatrix,
    RegularityBound,
    Side,
    Tolerances,
    TriState,
    Verdict,
    WitnessSequence,
    operator_norm,
    verify_annihilator,
    verify_certificate,
    verify_regularity,
    verify_tdz_certificate,
)


def test_tolerances_validate():
    with pytest.raises(InputError):
        Tolerances(eps_zero=0.0)
    with pytest.raises(InputError):
        Tolerances(eps_norm=-1.0)
    with pytest.raises(InputError):
        Tolerances(n_witness=2)
    t = Tolerances(eps_norm=1e-8, n_witness=10)
    assert t.eps_norm == 1e-8 and t.n_witness == 10


def test_verdict_consistency_enforced():
    with pytest.raises(InputError):
        Verdict(
            is_left_zero_divisor=TriState.YES,
            is_right_zero_divisor=TriState.NO,
            is_tdz=False,
            is_regular=False,
        )
    with pytest.raises(InputError):
        Verdict(
            is_left_zero_divisor=TriState.NO,
            is_right_zero_divisor=TriState.NO,
            is_tdz=True,
            is_regular=True,
        )
    v = Verdict(
        is_left_zero_divisor=TriState.NO,
        is_right_zero_divisor=TriState.NO,
        is_tdz=False,
        is_regular=True,
        certificate=RegularityBound(lambda0=1.0),
        extra_certificates=(RegularityBound(lambda0=2.0),),
    )
    assert len(v.all_certificates) == 2


def _diag(*values):
    return OperatorMatrix(np.diag(np.asarray(values, dtype=complex)))


def test_verify_tdz_passes_on_vanishing_products():
    # x = diag(0, 1) with the constant witness diag(1, 0): products are
    # exactly zero, witness norm exactly one.
    x = _diag(0, 1)
    cert = WitnessSequence(generator=lambda n: _diag(1, 0), side=Side.LEFT)
    report = verify_tdz_certificate(operator_norm, x, cert)
    assert report.passes
    assert all(s.witness_norm == 1.0 for s in report.samples)
    assert all(s.product_norm == 0.0 for s in report.samples)
    assert len(report.samples) == Tolerances().n_witness


def test_verify_tdz_rejects_non_decaying_products():
    # The identity is regular; no norm-one family drives products down.
    x = _diag(1, 1)
    cert = WitnessSequence(generator=lambda n: _diag(1, 0), side=Side.LEFT)
    report = verify_tdz_certificate(operator_norm, x, cert)
    assert not report.passes


def test_verify_tdz_rejects_bad_witness_norms():
    x = _diag(0, 1)
    cert = WitnessSequence(generator=lambda n: _diag(0.5, 0), side=Side.LEFT)
    assert not verify_tdz_certificate(operator_norm, x, cert).passes


def test_verify_tdz_right_side_order():
    calls = []

    def fake_product(a, b):
        calls.append((a, b))
        return _diag(0, 0)

    x = _diag(0, 1)
    w = _diag(1, 0)
    cert = WitnessSequence(generator=lambda n: w, side=Side.RIGHT)
    verify_tdz_certificate(operator_norm, x, cert, product=fake_product)
    assert all(a is w and b is x for a, b in calls)


def test_verify_tdz_generator_failure():
    def broken(n):
        raise ValueError("boom")

    cert = WitnessSequence(generator=broken, side=Side.LEFT)
    with pytest.raises(CertificateMalformedError):
        verify_tdz_certificate(operator_norm, _diag(0, 1), cert)


def test_verify_tdz_nonfinite_norm():
    x = _diag(0, 1)
    cert = WitnessSequence(
        generator=lambda n: OperatorMatrix([[1.0, 0.0], [0.0, 0.0]]),
        side=Side.LEFT,
    )
    with pytest.raises(NumericError):
        verify_tdz_certificate(lambda m: float("nan"), x, cert)


def test_verify_annihilator():
    x = _diag(0, 1)
    good = Annihilator(element=_diag(1, 0), side=Side.LEFT)
    assert verify_annihilator(operator_norm, x, good).passes
    bad = Annihilator(element=_diag(0, 1), side=Side.LEFT)
    assert not verify_annihilator(operator_norm, x, bad).passes
    zero = Annihilator(element=_diag(0, 0), side=Side.LEFT)
    assert not verify_annihilator(operator_norm, x, zero).passes


def test_verify_regularity():
    bound = RegularityBound(lambda0=0.5)
    assert verify_regularity(0.5, bound).passes
    assert verify_regularity(0.7, bound).passes
    assert not verify_regularity(0.1, bound).passes
    with pytest.raises(InputError):
        RegularityBound(lambda0=0.0)


def test_verify_certificate_dispatch():
    x = _diag(0, 1)
    w = WitnessSequence(generator=lambda n: _diag(1, 0), side=Side.LEFT)
    a = Annihilator(element=_diag(1, 0), side=Side.LEFT)
    r = RegularityBound(lambda0=1.0)
    assert verify_certificate(x, w, operator_norm).passes
    assert verify_certificate(x, a, operator_norm).passes
    assert verify_certificate(
        _diag(1, 1), r, operator_norm, min_modulus_estimate=1.0
    ).passes
    with pytest.raises(InputError):
        verify_certificate(_diag(1, 1), r, operator_norm)


def test_report_serialization_schema():
    x = _diag(0, 1)
    cert = WitnessSequence(generator=lambda n: _diag(1, 0), side=Side.LEFT)
    d = verify_tdz_certificate(operator_norm, x, cert).to_dict()
    assert set(d) == {"passes", "side", "samples", "criterion"}
    assert d["side"] == "left"
    assert set(d["samples"][0]) == {"n", "witness_norm", "product_norm"}
    assert isinstance(d["criterion"], str)
    assert isinstance(
        CertificationReport(True, None, (), "x").to_dict()["side"], type(None)
    )
