"""
Prometheus Metrics for spexlab
Tracks eigensolves, lemma verdicts and extremal-search throughput

Licensed under MIT License
"""
import time

from prometheus_client import (
    Counter,
    Histogram,
    Info,
    generate_latest,
    CollectorRegistry,
)

# Create a custom registry to avoid conflicts
REGISTRY = CollectorRegistry()

# ==================== Counters ====================

EIGENSOLVES_TOTAL = Counter(
    'spexlab_eigensolves_total',
    'Total spectral-radius solves',
    ['method'],  # method: power/dense-fallback
    registry=REGISTRY,
)

VERDICTS_TOTAL = Counter(
    'spexlab_verdicts_total',
    'Lemma verdicts produced',
    ['lemma', 'verdict'],
    registry=REGISTRY,
)

CANDIDATES_TOTAL = Counter(
    'spexlab_candidates_total',
    'Extremal-search candidates by outcome',
    ['family', 'outcome'],  # outcome: accepted/rejected/malformed/pruned
    registry=REGISTRY,
)

ERRORS_TOTAL = Counter(
    'spexlab_errors_total',
    'Total errors encountered',
    ['component', 'error_type'],
    registry=REGISTRY,
)


# ==================== Histograms ====================

EIGENSOLVE_LATENCY = Histogram(
    'spexlab_eigensolve_latency_seconds',
    'Spectral-radius solve latency in seconds',
    buckets=[0.0005, 0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0],
    registry=REGISTRY,
)


# ==================== Info ====================

SERVICE_INFO = Info(
    'spexlab',
    'Information about the spexlab toolkit run',
    registry=REGISTRY,
)


# ==================== Helper Functions ====================

def init_service_info(version: str, subcommand: str, config_hash: str):
    """Initialize run info metric"""
    SERVICE_INFO.info({
        'version': version,
        'subcommand': subcommand,
        'config_hash': config_hash,
    })


def record_verdict(lemma: str, verdict: str):
    """Record a lemma verdict"""
    VERDICTS_TOTAL.labels(lemma=lemma, verdict=verdict).inc()


def record_candidate(family: str, outcome: str, count: int = 1):
    """Record search candidates"""
    if count:
        CANDIDATES_TOTAL.labels(family=family, outcome=outcome).inc(count)


def record_error(component: str, error_type: str):
    """Record an error"""
    ERRORS_TOTAL.labels(component=component, error_type=error_type).inc()


def generate_metrics() -> str:
    """Generate Prometheus metrics output"""
    return generate_latest(REGISTRY).decode('utf-8')


# ==================== Context Managers ====================

class SolveTimer:
    """Context manager for timing eigensolves; set `method` before exit"""

    def __init__(self):
        self.method = "power"
        self.start_time = None
        self.elapsed = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self.start_time
        EIGENSOLVE_LATENCY.observe(self.elapsed)

        if exc_type:
            ERRORS_TOTAL.labels(
                component="spectral",
                error_type=exc_type.__name__
            ).inc()
        else:
            EIGENSOLVES_TOTAL.labels(method=self.method).inc()

        return False  # Don't suppress exceptions
