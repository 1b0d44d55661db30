"""Search configuration and preset configs"""

from pydantic import BaseModel, ConfigDict, Field


class SearchConfig(BaseModel):
    """Configuration for the coloring / point-perturbation search"""

    restarts: int = Field(4, ge=1, description="Random restarts of the MAX-k-CUT local search")
    max_stale_iterations: int = Field(2, ge=1, description="Consecutive rounds without improvement before stopping")
    perturbation_radius: int = Field(1, ge=1, description="Chebyshev radius of single-point integer moves")
    rng_seed: int = Field(0, ge=0, description="Seed for every random choice of the search")
    max_rounds: int = Field(20, ge=1, description="Hard cap on alternation rounds")
    max_perturbation_passes: int = Field(3, ge=1, description="Greedy passes over all points per perturbation call")
    grid_size: int | None = Field(None, ge=4, description="Side of the integer box for random points (None = 8n)")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "restarts": 4,
                "max_stale_iterations": 2,
                "perturbation_radius": 1,
                "rng_seed": 7,
                "max_rounds": 20,
                "max_perturbation_passes": 3,
                "grid_size": None,
            }
        },
    )


class SearchPresets:
    """Predefined search configurations"""

    @staticmethod
    def quick(seed: int = 0) -> SearchConfig:
        """Single restart, stops at the first stale round; for tests and smoke runs"""
        return SearchConfig(
            restarts=1, max_stale_iterations=1, max_rounds=3, max_perturbation_passes=1, rng_seed=seed
        )

    @staticmethod
    def desk(seed: int = 0) -> SearchConfig:
        """A few minutes for n around 30"""
        return SearchConfig(
            restarts=8, max_stale_iterations=3, max_rounds=25, max_perturbation_passes=4, rng_seed=seed
        )

    @staticmethod
    def thorough(seed: int = 0) -> SearchConfig:
        """Long runs for larger instances"""
        return SearchConfig(
            restarts=32,
            max_stale_iterations=6,
            perturbation_radius=2,
            max_rounds=200,
            max_perturbation_passes=10,
            rng_seed=seed,
        )
