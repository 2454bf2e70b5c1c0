import logging
from pathlib import (
    Path,
)

from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.management.base import (
    BaseRankedPackingCommand,
)
from ranked_packing.presenters import (
    EvaluationReportPresenter,
)
from ranked_packing.selfplay.evaluation import (
    evaluate,
    read_instances,
)
from ranked_packing.solvers import (
    get_solver_class,
)
from ranked_packing.utils import (
    atomic_write_text,
    to_json,
)


logger = logging.getLogger(__name__)


class Command(BaseRankedPackingCommand):
    """
    Оценка решателя на наборе экземпляров
    """

    help = (
        """
        Решает все экземпляры каталога --instances решателем --solver с жадным выбором действий. Отчет пишется в 
        --report (JSON) и рядом в CSV с тем же именем. Без --report сводка выводится в stdout.
        """
    )

    def add_arguments(self, parser):
        parser.add_argument(
            '--solver',
            dest='solver',
            action='store',
            type=str,
            help=f'Решатель: {", ".join(SolverEnum.values)}',
            required=True,
        )

        parser.add_argument(
            '--instances',
            dest='instances',
            action='store',
            type=str,
            help='Каталог набора экземпляров или файл экземпляра',
            required=True,
        )

        parser.add_argument(
            '--model',
            dest='model',
            action='store',
            type=str,
            help='Контрольная точка сети для решателя selfplay',
            default=None,
        )

        parser.add_argument(
            '--report',
            dest='report',
            action='store',
            type=str,
            help='JSON-файл отчета',
            default=None,
        )

        parser.add_argument(
            '--oracle',
            dest='oracle',
            action='store_true',
            help='Сравнивать с точной минимальной высотой на небольших экземплярах',
            default=False,
        )

        parser.add_argument(
            '--simulations',
            dest='simulations',
            action='store',
            type=int,
            help='Количество симуляций MCTS на ход',
            default=None,
        )

        parser.add_argument(
            '--height',
            dest='height',
            action='store',
            type=int,
            help='Виртуальная высота H\', по умолчанию из экземпляра',
            default=None,
        )

        self._add_config_arguments(parser)
        self._add_seed_argument(parser)
        self._add_jobs_argument(parser)

    def _handle(self, *args, **options):
        solver_name = options['solver']
        get_solver_class(solver_name)

        self._check_exists(options['instances'])
        instances = read_instances(options['instances'])

        config = self._prepare_run_config(options)
        model, reward_threshold = self._prepare_model(options['model'])

        result, rows = evaluate(
            solver_name,
            instances,
            height=options['height'],
            seed=options['seed'],
            jobs=self._prepare_jobs(options['jobs']),
            model=model,
            reward_threshold=reward_threshold,
            search_config=self._prepare_search_config(config, options['simulations']),
            oracle=options['oracle'],
        )
        self._raise_result_errors(result)

        report = EvaluationReportPresenter(rows, solver=solver_name).represent()
        logger.info(
            'Решатель %s: экземпляров %d, r=%s, sigma_r=%s, оптимальных %s',
            solver_name,
            report.summary['n_instances'],
            report.summary['r_mean'],
            report.summary['r_std'],
            report.summary['optimality_ratio'],
        )

        if options['report']:
            report_path = Path(options['report'])
            atomic_write_text(report_path, report.to_json())
            atomic_write_text(report_path.with_suffix('.csv'), report.to_csv())
        else:
            self.stdout.write(to_json(report.summary), ending='')
