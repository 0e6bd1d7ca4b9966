import os

DEFAULT_WORD_CAP = 12
DEFAULT_BFS_CAP = 10
DEFAULT_GRID_CAP = 10**6
DEFAULT_BOX_CAP = 10**6
DEFAULT_PERMUTATION_CAP = 8


def word_cap(cap=None, default=DEFAULT_WORD_CAP):
    """Resolve the cap on word length n.

    An explicit argument wins, then the MONOPATH_CAP environment variable,
    then ``default``.
    """
    if cap is not None:
        return int(cap)
    env = os.environ.get("MONOPATH_CAP")
    if env:
        return int(env)
    return default
