from __future__ import annotations

from pathlib import Path

from pydantic_settings import BaseSettings

BASE_DIR = Path(__file__).resolve().parent
CATALOG_DIR = BASE_DIR / "catalog"


class Settings(BaseSettings):
    # --- app ---
    app_name: str = "Symmetric Quadratization Toolkit"
    debug: bool = False

    # --- exhaustive caps ---
    max_table_vars: int = 20  # full truth tables / interpolation
    max_sweep_vars: int = 22  # vertex sweeps in verification
    max_brute_aux: int = 20  # brute-force min over y
    max_enum_bits: int = 24  # n + m for non-y-linear sweeps
    max_construct_vars: int = 64  # n for building a quadratization

    # --- lift ---
    max_lift_vars: int = 4
    max_roundtrip_vars: int = 3

    # --- report ---
    catalog_file: str = str(CATALOG_DIR / "report.yaml")
    report_n_max: int = 8
    report_seed: int = 2024

    # --- server ---
    host: str = "127.0.0.1"
    port: int = 8000

    model_config = {"env_file": ".env", "env_prefix": "SYMQUAD_"}


settings = Settings()
