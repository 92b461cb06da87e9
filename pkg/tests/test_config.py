import dataclasses

import pytest

from wimax_il import (
    PAPER_REFERENCE,
    PRESETS,
    DivisibilityError,
    ModulationScheme,
    RangeError,
    parse_config_json,
    parse_config_text,
    preset,
    s_of,
    validate_config,
)


def test_s_of_mapping():
    assert s_of(ModulationScheme.QPSK) == 1
    assert s_of(ModulationScheme.QAM16) == 2
    assert s_of(ModulationScheme.QAM64) == 3


def test_s_of_injective():
    values = {s_of(m) for m in ModulationScheme}
    assert values == {1, 2, 3}


@pytest.mark.parametrize(
    "n,d,s,rows",
    [(384, 16, 2, 24), (32, 16, 1, 2), (576, 16, 3, 36), (192, 16, 1, 12), (144, 12, 2, 12)],
)
def test_validate_accepts(n, d, s, rows):
    cfg = validate_config(n, d, s)
    assert cfg.rows == rows


def test_validate_rejects_non_divisible_n():
    with pytest.raises(DivisibilityError):
        validate_config(100, 16, 1)


def test_validate_rejects_non_divisible_rows():
    # 256/16 = 16 rows; 3 does not divide 16
    with pytest.raises(DivisibilityError):
        validate_config(256, 16, 3)


@pytest.mark.parametrize(
    "n,d,s",
    [(384, 10, 2), (384, 16, 4), (384, 16, 0), (16, 16, 1), (0, 16, 1)],
)
def test_validate_rejects_out_of_range(n, d, s):
    with pytest.raises(RangeError):
        validate_config(n, d, s)


def test_config_is_immutable():
    cfg = validate_config(192, 16, 1)
    with pytest.raises(dataclasses.FrozenInstanceError):
        cfg.n_cbps = 384


def test_validate_matches_invariants_exhaustively():
    """Acceptance iff every invariant holds, for all triples with n <= 2048."""
    for d in (12, 16):
        for s in (1, 2, 3):
            for n in range(1, 2049):
                should_pass = (
                    n >= 2 * d and n % d == 0 and (n // d) % s == 0
                )
                if should_pass:
                    validate_config(n, d, s)
                else:
                    with pytest.raises((RangeError, DivisibilityError)):
                        validate_config(n, d, s)


def test_text_round_trip():
    cfg = validate_config(576, 16, 3)
    assert parse_config_text(cfg.as_text()) == cfg
    assert parse_config_text("384,16,2").as_text() == "384,16,2"


def test_json_round_trip():
    cfg = validate_config(384, 16, 2)
    assert parse_config_json(cfg.as_json()) == cfg


@pytest.mark.parametrize("text", ["384,16", "a,16,2", "384;16;2", ""])
def test_text_parse_rejects_malformed(text):
    with pytest.raises(RangeError):
        parse_config_text(text)


@pytest.mark.parametrize("text", ["{}", '{"ncbps": 384}', "[384,16,2]", "{bad"])
def test_json_parse_rejects_malformed(text):
    with pytest.raises(RangeError):
        parse_config_json(text)


def test_presets():
    assert preset("qpsk").as_text() == "192,16,1"
    assert preset("qam16").as_text() == "384,16,2"
    assert preset("qam64").as_text() == "576,16,3"
    assert set(PRESETS) == {"qpsk", "qam16", "qam64"}
    with pytest.raises(RangeError):
        preset("bpsk")


def test_reference_constants_carried_verbatim():
    ref = PAPER_REFERENCE
    assert ref.area_fmax_mhz == 107.41
    assert ref.speed_fmax_mhz == 130.2
    assert ref.power_mw == 56
    assert (ref.area_ff, ref.speed_ff) == (15, 16)
    assert (ref.area_lut, ref.speed_lut) == (116, 120)
    assert ref.slices == 65
    assert ref.comparison_fmax_mhz == 130.24
    assert ref.upadhyaya_fmax_mhz == 121.82
    assert ref.lut_method_fmax_mhz == 62.51
    assert ref.upadhyaya_slices_pct == 3.49
    assert ref.upadhyaya_ff_pct == 0.50
    assert ref.upadhyaya_lut_pct == 3.35
    with pytest.raises(dataclasses.FrozenInstanceError):
        ref.power_mw = 0
