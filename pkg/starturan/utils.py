"""
Collection of miscellaneous utility functions and classes.
"""

import math
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, TypeVar, Union

from joblib import Parallel, delayed
from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def binom(a: int, b: int) -> int:
    """Binomial coefficient with ``C(a, b) = 0`` whenever ``b < 0``,
    ``a < 0`` or ``a < b``."""
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def format_fraction(x: Union[Fraction, int]) -> str:
    """Exact ``"p/q"`` string of a rational number."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fraction_decimal(x: Union[Fraction, int], digits: int = 6) -> float:
    return round(float(Fraction(x)), digits)


def jsonable(obj: Any) -> Any:
    """
    Recursively converts tuples, fractions and numpy scalars into plain
    JSON types. Fractions become ``"p/q"`` strings.
    """
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "item") and callable(obj.item):
        return obj.item()
    return obj


def parallel_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    num_jobs: int = 1,
    disable_progress_bar: bool = True,
    desc: str = None,
) -> List[R]:
    """
    Applies ``fn`` to every item, preserving order.

    Parameters
    ----------
    fn : Callable
        Function of one item. Must be picklable when ``num_jobs != 1``.
    items : Sequence
        Inputs.
    num_jobs : int, optional
        The maximum number of concurrently running jobs, by default 1.
        If -1 all CPUs are used. If 1 is given, no parallel computing code
        is used at all, which is useful for debugging.
    disable_progress_bar : bool, optional
        Disables the tqdm progress bar, by default True.
    desc : str, optional
        Progress bar label.

    Returns
    -------
    List
        ``[fn(x) for x in items]``
    """
    iterator: Iterable = tqdm(items, desc=desc, disable=disable_progress_bar)
    if num_jobs == 1:
        return [fn(x) for x in iterator]
    return list(Parallel(n_jobs=num_jobs)(delayed(fn)(x) for x in iterator))
