from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppSettings(BaseModel):
    """Application settings"""
    model_config = ConfigDict(frozen=True)

    name: str = "QBernstein Lab"
    version: str = "1.0.0"
    debug: bool = False


class ToleranceSettings(BaseModel):
    """Comparison tolerances (binary64 throughout)"""
    model_config = ConfigDict(frozen=True)

    # exact-zero guard for inverse()
    zero_guard: float = Field(1e-300, ge=0.0)
    # unit-scale absolute comparisons (unit imaginaries, S^3 membership)
    unit: float = Field(1e-12, gt=0.0)
    # |im(q)| below this is treated as real by axis() and the slice branch
    real_axis: float = Field(1e-12, gt=0.0)
    # rank threshold for the imaginary-part matrix of is_slice_polynomial
    slice_rank: float = Field(1e-10, gt=0.0)
    # relative threshold on |im(A conj B)| for the constant-slice branch
    constant_slice: float = Field(1e-10, gt=0.0)
    on_sphere: float = Field(1e-10, gt=0.0)
    hypothesis: float = Field(1e-9, ge=0.0)
    conclusion: float = Field(1e-7, ge=0.0)
    inequality: float = Field(1e-8, ge=0.0)
    near_equality: float = Field(1e-6, ge=0.0)
    monomial: float = Field(1e-10, ge=0.0)
    equality_ratio: float = Field(1e-9, ge=0.0)


class RootFinderSettings(BaseModel):
    """Aberth-Ehrlich configuration"""
    model_config = ConfigDict(frozen=True)

    max_sweeps: int = Field(200, ge=1, le=100000)
    convergence: float = Field(1e-13, gt=0.0)
    residual_factor: float = Field(1e3, ge=1.0)
    cluster: float = Field(1e-5, gt=0.0)
    restarts: int = Field(3, ge=1, le=20)
    jitter: float = Field(0.1, ge=0.0, le=1.0)
    seed: int = 7


class NormSettings(BaseModel):
    """Sup-norm engine configuration"""
    model_config = ConfigDict(frozen=True)

    grid: int = Field(2001, ge=3)
    brackets: int = Field(3, ge=1)
    bracket_tol: float = Field(1e-10, gt=0.0)
    tie_tol: float = Field(1e-12, ge=0.0)
    # beyond this degree the default grid may under-resolve the alpha profile
    max_degree: int = Field(32, ge=1)
    warn_high_degree: bool = True


class SamplingSettings(BaseModel):
    """Seeds and sample sizes of the verification harness"""
    model_config = ConfigDict(frozen=True)

    seed: int = 20240521
    alpha_grid: int = Field(2001, ge=2)
    axes_per_slice: int = Field(1000, ge=1)
    global_samples: int = Field(100000, ge=0)
    circle_samples: int = Field(10000, ge=1)
    chunk: int = Field(64, ge=1)


class OutputSettings(BaseModel):
    """Output formatting"""
    model_config = ConfigDict(frozen=True)

    text_digits: int = Field(6, ge=1, le=17)


class Settings(BaseSettings):
    """Main configuration record"""
    app: AppSettings = Field(default_factory=AppSettings)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    roots: RootFinderSettings = Field(default_factory=RootFinderSettings)
    norm: NormSettings = Field(default_factory=NormSettings)
    sampling: SamplingSettings = Field(default_factory=SamplingSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        env_prefix='QBERN_',
        # Nested settings via env vars, e.g. QBERN_NORM__GRID=4001
        env_nested_delimiter='__',
        extra='ignore',
        frozen=True,
    )

    @model_validator(mode='after')
    def check_consistency(self):
        """Reject records whose groups contradict each other"""
        if self.norm.brackets > self.norm.grid:
            raise ValueError("norm.brackets cannot exceed norm.grid")
        if self.tolerances.near_equality < self.tolerances.equality_ratio:
            raise ValueError("tolerances.near_equality must not be tighter than equality_ratio")
        return self

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "Settings":
        """Load settings from a YAML file; file values beat the environment"""
        with open(Path(path).expanduser(), "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Configuration file {path} must contain a mapping")
        return cls(**data)

    def with_overrides(self, **groups: Dict[str, Any]) -> "Settings":
        """Return a copy with some fields of the nested groups replaced.

        ``settings.with_overrides(norm={"grid": 401})`` keeps every other
        field as it is.
        """
        data = self.model_dump()
        changed = False
        for group, values in groups.items():
            if not values:
                continue
            data[group] = {**data[group], **values}
            changed = True
        # rebuild rather than model_copy so field constraints and validators run
        return type(self)(**data) if changed else self


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Default settings instance (environment + .env)"""
    return Settings()


def resolve_settings(settings: Optional[Settings]) -> Settings:
    return settings if settings is not None else get_settings()


if __name__ == "__main__":
    s = get_settings()
    print("QBernstein Lab configuration:")
    print(f"Version: {s.app.version}")
    print(f"Norm grid: {s.norm.grid} (brackets={s.norm.brackets})")
    print(f"Aberth sweeps: {s.roots.max_sweeps}")
    print(f"Sampling seed: {s.sampling.seed}")
