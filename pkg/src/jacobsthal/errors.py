class InvariantError(RuntimeError):
    """An exact-arithmetic invariant was violated.

    Every place that raises this is guarded by an identity that holds for
    all admissible inputs, so seeing one means a bug in this package.
    """
