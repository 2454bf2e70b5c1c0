from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.management.base import (
    BaseRankedPackingCommand,
)
from ranked_packing.packing.instances import (
    read_instance,
    validate_instance,
)
from ranked_packing.solvers import (
    get_solver,
    get_solver_class,
)
from ranked_packing.utils import (
    spawn_generator,
    to_json,
)


class Command(BaseRankedPackingCommand):
    """
    Упаковка одного экземпляра выбранным решателем
    """

    help = (
        """
        Упаковывает экземпляр --instance решателем --solver и выводит результат упаковки в формате JSON в stdout 
        или в файл --out. Для решателей с MCTS --dump-tree сохраняет статистику корня первого хода.
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
            '--instance',
            dest='instance',
            action='store',
            type=str,
            help='JSON-файл экземпляра',
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
            '--simulations',
            dest='simulations',
            action='store',
            type=int,
            help='Количество симуляций MCTS на ход',
            default=None,
        )

        parser.add_argument(
            '--out',
            dest='out',
            action='store',
            type=str,
            help='Файл результата упаковки',
            default=None,
        )

        parser.add_argument(
            '--dump-tree',
            dest='dump_tree',
            action='store',
            type=str,
            help='Файл статистики корня поиска',
            default=None,
        )

        self._add_config_arguments(parser)
        self._add_seed_argument(parser)

    def _handle(self, *args, **options):
        get_solver_class(options['solver'])

        self._check_exists(options['instance'])
        instance = read_instance(options['instance'])
        validate_instance(instance)

        config = self._prepare_run_config(options)
        model, reward_threshold = self._prepare_model(options['model'])

        solver = get_solver(
            options['solver'],
            search_config=self._prepare_search_config(config, options['simulations']),
            model=model,
            reward_threshold=reward_threshold,
        )
        solution = solver.solve(instance, generator=spawn_generator(options['seed']))

        self._write_output(options['out'], solution.dumps())

        if options['dump_tree'] and 'tree' in solution.extra:
            self._write_output(options['dump_tree'], to_json(solution.extra['tree']))
