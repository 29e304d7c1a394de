import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import leibxmod

FIXTURES = Path(os.environ.get("LEIBXMOD_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def test_algebra_and_homology():
    n2 = leibxmod.load_algebra(str(FIXTURES / "n2.algebra"))
    assert n2.dim == 2
    assert n2.basis == ["e1", "e2"]
    assert n2.bracket(0, 0) == ["0", "1"]
    assert n2.violations() == []
    assert n2.hl(2) == 1

    bad = leibxmod.load_algebra(str(FIXTURES / "bad_dim1.algebra"))
    (v,) = bad.violations()
    assert v["where"] == ["e", "e", "e"]


def test_multipliers():
    expected = {"k_inclusion.xmod": (0, 1, 0), "n2_identity.xmod": (1, 1, 1), "sl2_identity.xmod": (0, 0, 0)}
    for name, dims in expected.items():
        assert leibxmod.load_xmod(str(FIXTURES / name)).multiplier() == dims


def test_stem_cover_classification():
    e = leibxmod.load_extension(str(FIXTURES / "n2_over_k.extension"))
    assert e.classify() == {"central": True, "stem_extension": True, "stem_cover": True}
    top, base = e.theta_star()
    assert leibxmod.fraction_matrix(base) == [[Fraction(1)]]
    assert e.theta_star(perturbed=True) == (top, base)
    report = e.six_term()
    assert report["exact"] == [True] * 4
    assert report["surjective_at_end"]

    split = leibxmod.load_extension(str(FIXTURES / "split_over_k.extension"))
    assert not split.classify()["stem_extension"]
    assert not any(split.crosscheck()[k] for k in ("kernel_in_derived", "theta_surjective"))


def test_perfect_stem_cover():
    sl2 = leibxmod.load_algebra(str(FIXTURES / "sl2.algebra"))
    cover = leibxmod.stem_cover_of_perfect(leibxmod.identity_xmod(sl2))
    assert cover.classify()["stem_cover"]
    assert cover.total.multiplier() == (0, 0, 0)
    n2 = leibxmod.load_algebra(str(FIXTURES / "n2.algebra"))
    with pytest.raises(ValueError, match="not perfect"):
        leibxmod.stem_cover_of_perfect(leibxmod.identity_xmod(n2))


def test_run_command_and_errors():
    status, text, report = leibxmod.run("classify-extension", str(FIXTURES / "n2_over_k.extension"))
    assert status == 0
    assert "central ✓ stem ✓ cover ✓" in text
    assert json.loads(report)["stem_cover"] is True
    assert leibxmod.run("check", str(FIXTURES / "bad_rational.algebra"))[0] == 2
    with pytest.raises(leibxmod.FixtureError):
        leibxmod.load_algebra(str(FIXTURES / "bad_rational.algebra"))


def test_json_round_trip():
    xm = leibxmod.load_xmod(str(FIXTURES / "n2_identity.xmod"))
    doc = json.loads(xm.to_json())
    assert doc["kind"] == "xmod"
    assert doc["top"]["basis"] == ["e1", "e2"]
    assert json.loads(xm.exterior().to_json())["top"]["basis"]
