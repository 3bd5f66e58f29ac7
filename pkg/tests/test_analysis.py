"""Structural analysis checks."""

import pytest

from nsabc.analysis import (
    SUBCOMMANDS,
    avalanche,
    gbox_bijectivity,
    gbox_diffusion,
    gbox_identity,
)


def test_bijectivity_passes():
    report = gbox_bijectivity(16, samples=3, seed=11)
    assert report.ok
    assert len(report.lines) == 3


def test_diffusion_passes():
    report = gbox_diffusion(16, samples=3, seed=12)
    assert report.ok


def test_identity_passes():
    report = gbox_identity(16, samples=3, seed=13)
    assert report.ok


def test_exhaustive_checks_require_w16():
    for fn in (gbox_bijectivity, gbox_diffusion, gbox_identity):
        with pytest.raises(ValueError):
            fn(32, samples=1, seed=0)


def test_avalanche_small_sample():
    report = avalanche(16, samples=150, seed=7)
    assert report.ok  # below the flagging threshold nothing is flagged
    mean_line = next(ln for ln in report.lines if ln.startswith("flip probability"))
    mean = float(mean_line.split("mean=")[1].split()[0])
    assert 0.47 < mean < 0.53


def test_avalanche_rejects_nonpositive_samples():
    with pytest.raises(ValueError):
        avalanche(16, samples=0)


def test_report_rendering():
    report = gbox_identity(16, samples=1, seed=1)
    text = report.render()
    assert text.startswith("[PASS]")
    assert "w=16" in text


def test_subcommand_registry():
    assert set(SUBCOMMANDS) == {"gbox-bijectivity", "gbox-diffusion", "gbox-identity", "avalanche"}
