from .family import ForbiddenFamily, FreenessReport, verify_free, verify_report
from .exact import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SearchResult,
    TuranProblem,
    default_budget,
    ex_exact,
    ex_exact_linear,
)
from .local import ex_lower_local_search
