class InputError(ValueError):
    """Malformed or out-of-contract input (bad file, wrong dimension, excluded parameter)."""
