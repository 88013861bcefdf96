"""
Reproduction manifest: one command per acceptance check
"""
from dataclasses import dataclass
from typing import List


@dataclass(frozen=True)
class ManifestEntry:
    key: str
    command: str
    description: str
    budget_s: int


MANIFEST: List[ManifestEntry] = [
    ManifestEntry("wdiff", "verify --lemma wdiff --n1-max 12 --max-length 12",
                  "walk-difference identity on paths, exact integers", 10),
    ManifestEntry("fact1", "verify --lemma fact1 --ell-max 15 --n-max 60",
                  "binomial-sum bound, exact rationals", 1),
    ManifestEntry("weval", "verify --lemma weval --orders 10,25,40 --points 20",
                  "crossing-walk series bound on paths over a 20-point grid", 30),
    ManifestEntry("lemma1", "verify --lemma lemma1 --n1-max 20",
                  "balancing two paths lowers rho, full sweep", 60),
    ManifestEntry("lemma2", "verify --lemma lemma2 --count 50",
                  "four-path transfer raises rho at size 130", 300),
    ManifestEntry("lemma3", "verify --lemma lemma3 --count 25",
                  "five-path transfer raises rho at size 310", 600),
    ManifestEntry("series", "verify --lemma series --count 100",
                  "series root vs direct eigensolve on random multipartite specs", 120),
    ManifestEntry("anchors", "verify --lemma anchors --n-max 50 --m-max 400",
                  "rho(K_{2,n-2}) = sqrt(2n-4) and rho(K_1 v E_m) = sqrt(m)", 60),
    ManifestEntry("gfun", "verify --lemma gfun",
                  "g-functions negative and decreasing from their thresholds", 1),
    ManifestEntry("observation", "verify --lemma observation --max-order 12",
                  "closed-form C_ell test on K_2 v forest vs cycle search", 300),
    ManifestEntry("containment", "verify --lemma containment --n-max 7",
                  "exhaustive winner rho >= restricted winner rho", 600),
    ManifestEntry("rayleigh", "verify --lemma rayleigh --count 500",
                  "rho gain of single-edge edits bounded below by the Rayleigh gain", 60),
]


def render_manifest(program: str = "python main.py") -> str:
    lines = []
    for entry in MANIFEST:
        lines.append(f"# {entry.key}: {entry.description} (budget {entry.budget_s}s)")
        lines.append(f"{program} {entry.command}")
    return "\n".join(lines) + "\n"
