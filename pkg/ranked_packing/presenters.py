import math
from abc import (
    ABCMeta,
    abstractmethod,
)
from dataclasses import (
    dataclass,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
)

import pandas as pd

from ranked_packing.consts import (
    ARTIFACT_SCHEMA_VERSION,
)
from ranked_packing.utils import (
    to_json,
)


REPORT_COLUMNS = (
    'instance',
    'solver',
    'n_items',
    'w_star',
    'height',
    'h_star',
    'h_tilde',
    'reward',
    'utilization',
    'status',
    'dead',
    'optimal_h_star',
    'oracle_height',
    'optimal',
)


def _finite_or_none(value: float) -> Optional[float]:
    return None if value is None or math.isnan(value) else float(value)


@dataclass
class EvaluationReport:
    """
    Сводка оценки решателя и построчные результаты
    """
    summary: Dict[str, Any]
    frame: pd.DataFrame

    def to_json(self) -> str:
        rows = self.frame.astype(object).where(self.frame.notna(), None).to_dict(orient='records')

        return to_json({
            'schema_version': ARTIFACT_SCHEMA_VERSION,
            'summary': self.summary,
            'instances': rows,
        })

    def to_csv(self) -> str:
        return self.frame.to_csv(index=False)


class ResultPresenter(metaclass=ABCMeta):
    """
    Презентер результата выполнения запускаемого объекта.
    """

    def __init__(self, rows: Sequence[Dict[str, Any]]):
        self._rows = list(rows)

        self._presentable_result = None

    @abstractmethod
    def represent(self):
        """
        Осуществляется преобразование результата выполнения запускаемого
        объекта в нужный вид
        """


class EvaluationReportPresenter(ResultPresenter):
    """
    Строки отчета оценки в сводку: r, sigma_r, доля оптимальных упаковок,
    средняя утилизация и количество тупиковых эпизодов
    """

    def __init__(self, rows: Sequence[Dict[str, Any]], solver: str = ''):
        super().__init__(rows)

        self._solver = solver

    def represent(self) -> EvaluationReport:
        frame = pd.DataFrame(self._rows, columns=list(REPORT_COLUMNS))

        if frame.empty:
            summary = {
                'solver': self._solver,
                'n_instances': 0,
                'r_mean': None,
                'r_std': None,
                'optimality_ratio': None,
                'h_star_ratio': None,
                'u_mean': None,
                'dead_count': 0,
            }
        else:
            summary = {
                'solver': self._solver,
                'n_instances': int(len(frame)),
                'r_mean': float(frame['reward'].mean()),
                'r_std': float(frame['reward'].std(ddof=0)),
                'optimality_ratio': float(frame['optimal'].astype(float).mean()),
                'h_star_ratio': float(frame['optimal_h_star'].astype(float).mean()),
                'u_mean': _finite_or_none(frame['utilization'].astype(float).mean()),
                'dead_count': int(frame['dead'].sum()),
            }

        self._presentable_result = EvaluationReport(summary=summary, frame=frame)

        return self._presentable_result


class ScenarioReportPresenter(ResultPresenter):
    """
    Отчет сценария в раскладке "строка на решатель, пара колонок r_mean /
    u_mean на DU"
    """

    def represent(self) -> pd.DataFrame:
        frame = pd.DataFrame(self._rows)
        if frame.empty:
            self._presentable_result = pd.DataFrame(columns=['solver'])

            return self._presentable_result

        grouped = frame.groupby(['solver', 'du'], sort=False).agg(
            r_mean=('reward', 'mean'),
            u_mean=('utilization', 'mean'),
        )

        columns: List[str] = []
        table = pd.DataFrame(index=pd.Index(frame['solver'].unique(), name='solver'))
        for du in frame['du'].unique():
            for metric in ('r_mean', 'u_mean'):
                column = f'{du}_{metric}'
                columns.append(column)
                table[column] = [
                    grouped.loc[(solver, du), metric]
                    for solver in table.index
                ]

        self._presentable_result = table[columns].reset_index()

        return self._presentable_result
