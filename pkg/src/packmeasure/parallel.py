import os

THREADS_ENV = "PACKMEASURE_THREADS"


def worker_count(requested: int | None = None) -> int:
    """Worker pool size: explicit request, else $PACKMEASURE_THREADS, else CPU count."""
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get(THREADS_ENV, "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1
