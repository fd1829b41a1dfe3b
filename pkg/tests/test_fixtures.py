import os

import pytest

from x0dn.errors import FixtureError
from x0dn.fixtures import (
    ENV_VAR,
    FixtureSet,
    RationalityEntry,
    fixture_text,
    load_fixtures,
    parse_fixtures,
)


@pytest.fixture(scope="module")
def fx() -> FixtureSet:
    return load_fixtures()


def test_record_counts(fx):
    assert len(fx.allowed_d) == 52
    assert len(fx.hyperelliptic_pairs) == 33
    assert len(fx.bielliptic_level_one) == 22
    assert len(fx.airr2_level_one) == 17
    assert len(fx.automorphism_overrides) == 2
    assert len(fx.rationality) == 82
    assert len(fx.ranks) == 40


def test_allowed_d_membership(fx):
    assert fx.allowed_d[0] == 6
    assert fx.allowed_d[-1] == 546
    assert 26 in fx.allowed_d
    assert 210 in fx.allowed_d
    assert 30 not in fx.allowed_d  # quaternion disc, but no bielliptic level


def test_airr2_subset_of_bielliptic(fx):
    assert set(fx.airr2_level_one) <= set(fx.bielliptic_level_one)
    assert set(fx.bielliptic_level_one) - set(fx.airr2_level_one) == {
        85, 115, 178, 202, 462,
    }


def test_hyperelliptic_split(fx):
    level_one = {d for d, n in fx.hyperelliptic_pairs if n == 1}
    higher = {(d, n) for d, n in fx.hyperelliptic_pairs if n > 1}
    assert len(level_one) == 21
    assert higher == {
        (6, 11), (6, 19), (6, 29), (6, 31), (6, 37), (10, 11), (10, 23),
        (14, 5), (15, 2), (22, 3), (22, 5), (39, 2),
    }
    # every hyperelliptic discriminant also appears in the allowed list
    assert {d for d, _ in fx.hyperelliptic_pairs} <= set(fx.allowed_d)


def test_overrides(fx):
    assert fx.automorphism_overrides == {(21, 5), (22, 7)}


def test_rationality_entries(fx):
    entry = fx.rationality[(6, 23, 69)]
    assert entry == RationalityEntry(5, "unknown", "N/A")
    assert fx.rationality[(22, 7, 77)].rational_points == "yes"
    assert fx.rationality[(39, 4, 39)].genus == 13
    verdicts = [e.rational_points for e in fx.rationality.values()]
    assert verdicts.count("yes") == 38
    assert verdicts.count("no") == 42
    assert verdicts.count("unknown") == 2


def test_rank_rows_cover_exactly_non_no_rows(fx):
    non_no = {
        key
        for key, e in fx.rationality.items()
        if e.rational_points in ("yes", "unknown")
    }
    assert set(fx.ranks) == non_no
    positive = {key for key, r in fx.ranks.items() if r > 0}
    assert positive == {
        (6, 17, 102), (6, 23, 138), (6, 41, 246), (6, 71, 426),
        (10, 13, 130), (10, 17, 170), (10, 29, 290),
        (22, 7, 154), (22, 17, 374),
    }


@pytest.mark.parametrize(
    "line",
    [
        "NOSUCHTAG,6,Voight09",
        "ALLOWED_D,6",  # citation missing: body empty
        "ALLOWED_D,12,Voight09",  # odd prime count
        "ALLOWED_D,4,Voight09",  # not squarefree
        "ALLOWED_D,six,Voight09",
        "HYPERELLIPTIC,6,1,2,Ogg83",
        "HYPERELLIPTIC,6,2,Ogg83",  # gcd > 1
        "RATIONALITY,6,5,4,1,no,NR15",  # 4 not a Hall divisor of 30
        "RATIONALITY,6,5,1,1,no,NR15",  # trivial divisor
        "RATIONALITY,6,5,3,1,maybe,NR15",
        "RATIONALITY,6,5,3,-1,no,NR15",
        "RANK,6,5,15,-2,Ribet90",
        "RANK,6,5,15,Ribet90",
    ],
)
def test_malformed_lines_fail(line):
    with pytest.raises(FixtureError):
        parse_fixtures(line)


def test_duplicate_lines_fail():
    text = "ALLOWED_D,6,Voight09\nALLOWED_D,6,Again"
    with pytest.raises(FixtureError, match="duplicate"):
        parse_fixtures(text)


def test_comments_and_blanks_skipped():
    text = "# header\n\nALLOWED_D,6,Voight09\n"
    fx = parse_fixtures(text)
    assert fx.allowed_d == (6,)


def test_path_and_env_override(tmp_path, monkeypatch):
    small = tmp_path / "prior_work.txt"
    small.write_text("ALLOWED_D,10,Voight09\n")
    assert parse_fixtures(fixture_text(str(small))).allowed_d == (10,)
    # a directory gets the standard file name appended
    assert parse_fixtures(fixture_text(str(tmp_path))).allowed_d == (10,)
    monkeypatch.setenv(ENV_VAR, str(small))
    assert parse_fixtures(fixture_text()).allowed_d == (10,)
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "absent.txt"))
    with pytest.raises(FixtureError, match="cannot read"):
        fixture_text()


def test_packaged_copy_loads_without_env(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert load_fixtures().allowed_d[0] == 6


def test_env_var_name():
    assert ENV_VAR == "X0DN_FIXTURES"
    assert ENV_VAR not in os.environ or True
