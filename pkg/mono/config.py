"""
Configuration
Environment-driven defaults for seeds, workers and exact-search limits
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .solvers.exact_search import SearchLimits
from .solvers.proof_guided import HeuristicConfig

ENV_PREFIX = "MONO_"


class Settings(BaseModel):
    """Defaults that CLI flags may override"""
    master_seed: int = 0
    workers: int = Field(1, ge=1)
    cover_limit: int = Field(24, ge=1)
    partition_limit: int = Field(16, ge=1)
    independence_limit: int = Field(64, ge=1)
    retry_budget: int = Field(64, ge=1)

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> "Settings":
        """Read MONO_* variables, after loading a .env file if one exists"""
        load_dotenv(env_file)
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        return cls(**values)

    def search_limits(self) -> SearchLimits:
        return SearchLimits(
            cover_n=self.cover_limit,
            partition_n=self.partition_limit,
            two_partition_n=self.partition_limit,
            independence_n=self.independence_limit,
        )

    def heuristic_config(self, seed: Optional[int] = None) -> HeuristicConfig:
        return HeuristicConfig(
            seed=self.master_seed if seed is None else seed,
            star_retries=self.retry_budget,
            split_retries=self.retry_budget,
        )


def get_settings(env_file: Optional[str] = None) -> Settings:
    return Settings.from_env(env_file)
