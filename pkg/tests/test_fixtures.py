import json
import shutil

import pytest

from lambdasv import fixtures
from lambdasv.fixtures import FixtureError


@pytest.fixture
def fixture_copy(tmp_path):
    dst = tmp_path / "fx"
    shutil.copytree(fixtures.PACKAGE_DIR, dst)
    return dst


def test_packaged_fixtures_load():
    states = fixtures.load_states()
    assert len(states) == 120
    assert all(v.is_unit() for v in states)
    assert len(fixtures.load_types()) == 120
    bases, underlined = fixtures.load_bases()
    assert len(bases) == 210 and len(underlined) == 30
    for which in ("J", "J1", "J2"):
        opp = fixtures.load_opposites(which)
        assert all(opp[opp[i]] == i for i in opp)
    pairs = fixtures.load_basis_pairs()
    assert all(pairs[pairs[k]] == k for k in pairs)


def test_fixed_bases_are_underlined():
    pairs = fixtures.load_basis_pairs()
    _, underlined = fixtures.load_bases()
    assert sorted(k for k, v in pairs.items() if k == v) == sorted(underlined)


def test_missing(tmp_path):
    with pytest.raises(FixtureError, match="missing"):
        fixtures.load_states(tmp_path)


def test_corrupt_json(fixture_copy):
    (fixture_copy / fixtures.STATES).write_text("[[1, 2")
    with pytest.raises(FixtureError, match="corrupt"):
        fixtures.load_states(fixture_copy)


def test_non_unit_state(fixture_copy):
    path = fixture_copy / fixtures.STATES
    rows = json.loads(path.read_text())
    rows[4][0] = [3, 1, 0, 1]
    path.write_text(json.dumps(rows))
    with pytest.raises(FixtureError, match="unit"):
        fixtures.load_states(fixture_copy)


def test_short_pairs(fixture_copy):
    path = fixture_copy / fixtures.BASIS_PAIRS
    path.write_text(json.dumps(json.loads(path.read_text())[:-1]))
    with pytest.raises(FixtureError):
        fixtures.load_basis_pairs(fixture_copy)


def test_bad_basis_shape(fixture_copy):
    path = fixture_copy / fixtures.BASES
    data = json.loads(path.read_text())
    data["underlined"] = data["underlined"][:5]
    path.write_text(json.dumps(data))
    with pytest.raises(FixtureError):
        fixtures.load_bases(fixture_copy)


def test_env_var(fixture_copy, monkeypatch):
    monkeypatch.setenv(fixtures.ENV_VAR, str(fixture_copy))
    assert fixtures.fixture_dir() == fixture_copy
    assert len(fixtures.load_states()) == 120
