import pytest
from pydantic import ValidationError

from app.config import Settings, ToleranceSettings, get_settings, resolve_settings
from app.exceptions import RealAxisInput, ZeroDivisor
from app.models.polynomial import QPolynomial
from app.models.quaternion import QI, Quaternion
from app.services.qpolynomial import is_slice_polynomial
from app.services.quaternion_core import axis, inverse


def test_defaults():
    s = Settings()
    assert s.norm.grid == 2001
    assert s.norm.brackets == 3
    assert s.norm.bracket_tol == 1e-10
    assert s.sampling.seed == 20240521
    assert s.tolerances.constant_slice == 1e-10
    assert s.roots.restarts >= 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("QBERN_NORM__GRID", "401")
    monkeypatch.setenv("QBERN_SAMPLING__SEED", "7")
    s = Settings()
    assert s.norm.grid == 401
    assert s.sampling.seed == 7
    assert s.norm.brackets == 3


def test_from_yaml(tmp_path):
    path = tmp_path / "qbern.yaml"
    path.write_text("norm:\n  grid: 301\ntolerances:\n  conclusion: 1.0e-6\n")
    s = Settings.from_yaml(path)
    assert s.norm.grid == 301
    assert s.tolerances.conclusion == 1e-6
    assert s.sampling.alpha_grid == 2001


def test_from_yaml_needs_a_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        Settings.from_yaml(path)


def test_with_overrides_keeps_other_fields():
    s = Settings().with_overrides(norm={"grid": 11}, sampling={})
    assert s.norm.grid == 11
    assert s.norm.brackets == 3
    assert s.sampling == Settings().sampling


def test_with_overrides_validates():
    with pytest.raises(ValidationError):
        Settings().with_overrides(norm={"grid": 1})
    with pytest.raises(ValidationError):
        Settings().with_overrides(norm={"grid": 5, "brackets": 6})
    with pytest.raises(ValidationError):
        Settings().with_overrides(tolerances={"near_equality": 1e-12, "equality_ratio": 1e-9})


def test_settings_are_frozen():
    s = Settings()
    with pytest.raises(ValidationError):
        s.norm.grid = 5


def test_resolve_settings():
    s = Settings().with_overrides(norm={"grid": 21})
    assert resolve_settings(s) is s
    assert resolve_settings(None).norm.grid >= 3


@pytest.fixture
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_library_defaults_follow_the_environment(monkeypatch, fresh_settings):
    monkeypatch.setenv("QBERN_TOLERANCES__REAL_AXIS", "0.5")
    monkeypatch.setenv("QBERN_TOLERANCES__ZERO_GUARD", "1e-3")
    monkeypatch.setenv("QBERN_TOLERANCES__SLICE_RANK", "0.5")
    assert get_settings().tolerances.real_axis == 0.5
    with pytest.raises(RealAxisInput):
        axis(Quaternion(1.0, 0.1))
    with pytest.raises(ZeroDivisor):
        inverse(Quaternion(1e-4))
    # i and 0.2 j span two directions; the off-axis part 0.1 is below the rank threshold
    P = QPolynomial.of(Quaternion(1.0, 0.1), Quaternion(0.0, 0.0, 0.2))
    assert is_slice_polynomial(P) is not None
    assert is_slice_polynomial(P, ToleranceSettings()) is None


def test_explicit_tolerances_win_over_the_environment(monkeypatch, fresh_settings):
    monkeypatch.setenv("QBERN_TOLERANCES__REAL_AXIS", "0.5")
    assert axis(Quaternion(1.0, 0.1), ToleranceSettings()) == QI
