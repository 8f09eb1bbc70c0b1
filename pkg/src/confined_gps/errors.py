class ConvergenceError(RuntimeError):
    """An iterative numerical routine hit its iteration cap."""
