"""search: alternate point perturbation and recoloring to find drawings with few monochromatic crossings"""
import numpy as np

from kcolored.coloring import SearchConfig, alternate_search, count_monochromatic
from kcolored.domain.messages import InstanceFile
from kcolored.geometry import convex_point_set, random_point_set

from .base_command import BaseCommand


class SearchCommand(BaseCommand):
    def __init__(self, run_id: str | None = None):
        super().__init__("search", run_id)
        self.policies = {"n": {"min": 3}, "k": {"min": 1}}
        self.history: list[int] = []

    def execute(self, n: int, k: int, cfg: SearchConfig | None = None, convex: bool = False) -> InstanceFile:
        """Best instance found; the seed is recorded so the run can be repeated"""
        if not self.validate_policy("n", n):
            raise ValueError(f"Search needs n >= 3, got {n}")
        if not self.validate_policy("k", k):
            raise ValueError(f"Search needs k >= 1, got {k}")
        cfg = cfg or SearchConfig()

        if convex:
            initial = convex_point_set(n)
        else:
            initial = random_point_set(n, np.random.default_rng([cfg.rng_seed, n, k]), grid=cfg.grid_size)
        self.log_event(
            "search_started",
            {"message": f"n={n} k={k} restarts={cfg.restarts} seed={cfg.rng_seed}", "stage": "search"},
        )

        self.history = []
        points, chi = alternate_search(initial, k, cfg, history=self.history)
        best = count_monochromatic(points, chi)
        self.log_event(
            "search_completed",
            {"message": f"{best} monochromatic crossings after {len(self.history) - 1} rounds", "stage": "search"},
        )
        return InstanceFile.from_domain(points, chi, seed=cfg.rng_seed)
