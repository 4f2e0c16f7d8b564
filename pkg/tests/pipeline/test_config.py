import json
import math

import pytest

from core.errors import ConfigError
from jsf import count_islands
from pipeline import build_kernel, list_presets, load_config, load_preset, write_resolved_config
from pipeline.config import read_resolved_config
from pipeline.kernels import build_unfiltered_kernel, correlation_angle
from schema import SCHEMA_VERSION, ExperimentConfig, GaussianKernelSpec, GridSpec, NliKernelSpec


def test_presets_listed_and_loadable():
    names = list_presets()
    assert names == [
        "chirped_gaussian",
        "flat_phase_gaussian",
        "measured_gains",
        "nli_fiber_cwdm",
    ]
    for name in names:
        config = load_preset(name)
        assert config.name == name


def test_chirped_preset_contents():
    config = load_preset("chirped_gaussian")
    assert isinstance(config.kernel, GaussianKernelSpec)
    assert config.kernel.pump.chirp_coefficient == 1.0
    assert config.strengths == [1.0, 1.5, 2.0, 2.5, 3.0]
    assert config.iteration.required_modes == 3


def test_unknown_preset():
    with pytest.raises(ConfigError, match="unknown preset 'nope'"):
        load_preset("nope")
    with pytest.raises(ConfigError, match="available: chirped_gaussian, flat_phase_gaussian"):
        load_preset("chirped")


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(tmp_path / "missing.json")


def test_load_config_invalid(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"mode_count": 0}))
    with pytest.raises(ConfigError, match="invalid config"):
        load_config(path)
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(path)


def test_resolved_config_round_trip(tmp_path):
    config = load_preset("measured_gains")
    path = write_resolved_config(config, tmp_path)
    payload = json.loads(path.read_text())
    assert payload["schema_tag"] == SCHEMA_VERSION
    assert read_resolved_config(path) == config


def test_resolved_config_wrong_schema(tmp_path):
    path = tmp_path / "resolved_config.json"
    path.write_text(json.dumps({"schema_tag": "other/0", "config": {}}))
    with pytest.raises(ConfigError, match="other/0"):
        read_resolved_config(path)


def test_build_gaussian_kernel():
    spec = GaussianKernelSpec(signal_grid=GridSpec(n_points=64), idler_grid=GridSpec(n_points=64))
    kernel = build_kernel(spec)
    assert kernel.shape == (64, 64)
    assert kernel.strength_G == 2.5
    assert build_kernel(spec, G=1.0).strength_G == 1.0


def test_separable_angle_keyword():
    spec = GaussianKernelSpec(correlation_angle_deg="separable", sigma_m=0.5)
    assert correlation_angle(spec) == pytest.approx(math.pi / 12)


def test_build_nli_kernel_with_cwdm():
    spec = load_preset("nli_fiber_cwdm").kernel
    assert isinstance(spec, NliKernelSpec)
    kernel = build_kernel(spec)
    assert count_islands(kernel) == 1
    assert kernel.discarded_energy > 0
    assert count_islands(build_unfiltered_kernel(spec)) >= 2


def test_default_experiment():
    config = ExperimentConfig()
    assert config.strengths == [2.5]
    assert build_kernel(config.kernel).shape == (256, 256)
