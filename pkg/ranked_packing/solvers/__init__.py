from typing import (
    Dict,
    Type,
)

from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.exceptions import (
    UnknownSolverError,
)
from ranked_packing.solvers.base import (
    BaseSolver,
    ExactSolver,
    HVRAASolver,
    LegoSolver,
    RandomSolver,
)
from ranked_packing.solvers.search import (
    RolloutMCTSSolver,
    SelfPlaySolver,
)
from ranked_packing.strings import (
    UNKNOWN_SOLVER_ERROR,
)


SOLVERS: Dict[str, Type[BaseSolver]] = {
    SolverEnum.SELFPLAY: SelfPlaySolver,
    SolverEnum.MCTS: RolloutMCTSSolver,
    SolverEnum.HVRAA: HVRAASolver,
    SolverEnum.LEGO: LegoSolver,
    SolverEnum.RANDOM: RandomSolver,
    SolverEnum.EXACT: ExactSolver,
}


def get_solver_class(name: str) -> Type[BaseSolver]:
    try:
        return SOLVERS[name]
    except KeyError:
        raise UnknownSolverError(
            UNKNOWN_SOLVER_ERROR.format(solver=name, choices=', '.join(SOLVERS))
        )


def get_solver(name: str, **kwargs) -> BaseSolver:
    """
    Решатель по имени из перечисления SolverEnum
    """
    return get_solver_class(name)(**kwargs)
