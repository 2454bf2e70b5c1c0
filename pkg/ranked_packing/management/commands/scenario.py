import logging
from pathlib import (
    Path,
)

from ranked_packing.consts import (
    ARTIFACT_SCHEMA_VERSION,
)
from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.errors import (
    InvalidArgumentsError,
)
from ranked_packing.management.base import (
    BaseRankedPackingCommand,
)
from ranked_packing.scenario.managers import (
    ScenarioRunnerManager,
)
from ranked_packing.scenario.sites import (
    check_hour,
    generate_synthetic_region,
    read_region,
    read_sites_csv,
    region_from_sites,
    sites_frame,
)
from ranked_packing.solvers import (
    get_solver_class,
)
from ranked_packing.strings import (
    INVALID_RANGE_ERROR,
)
from ranked_packing.utils import (
    atomic_write_text,
    to_json,
)


logger = logging.getLogger(__name__)

DEFAULT_SCENARIO_SOLVERS = ','.join((SolverEnum.HVRAA, SolverEnum.LEGO, SolverEnum.RANDOM))


class Command(BaseRankedPackingCommand):
    """
    Сценарий ORAN: упаковка запросов подключенных RU на выбранных DU
    """

    help = (
        """
        Для каждого DU из --du (по умолчанию все DU региона) генерирует --samples экземпляров запросов RU в час 
        --hour и решает их каждым решателем из --solvers. Итоговая таблица: строка на решатель, r_mean и u_mean 
        на каждый DU. С --synthetic регион генерируется по разделу scenario конфигурации, с --sites сайты читаются из 
        CSV, а DU размещаются синтетически. Построенный регион сохраняется в --region.
        """
    )

    def add_arguments(self, parser):
        parser.add_argument(
            '--region',
            dest='region',
            action='store',
            type=str,
            help='JSON-файл региона',
            default=None,
        )

        parser.add_argument(
            '--synthetic',
            dest='synthetic',
            action='store_true',
            help='Сгенерировать синтетический регион',
            default=False,
        )

        parser.add_argument(
            '--sites',
            dest='sites',
            action='store',
            type=str,
            help='CSV-файл сайтов RU, DU размещаются по разделу scenario конфигурации',
            default=None,
        )

        parser.add_argument(
            '--sites-csv',
            dest='sites_csv',
            action='store',
            type=str,
            help='CSV-файл для выгрузки сайтов региона',
            default=None,
        )

        parser.add_argument(
            '--hour',
            dest='hour',
            action='store',
            type=int,
            help='Час суток, по умолчанию час пиковой нагрузки',
            default=None,
        )

        parser.add_argument(
            '--du',
            dest='du_ids',
            action='append',
            type=int,
            help='Идентификатор DU, можно повторять',
            default=[],
        )

        parser.add_argument(
            '--samples',
            dest='samples',
            action='store',
            type=int,
            help='Количество экземпляров запросов на DU',
            default=10,
        )

        parser.add_argument(
            '--solvers',
            dest='solvers',
            action='store',
            type=str,
            help='Решатели через запятую',
            default=DEFAULT_SCENARIO_SOLVERS,
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
            help='JSON-файл отчета, рядом пишется CSV',
            default=None,
        )

        self._add_config_arguments(parser)
        self._add_seed_argument(parser)
        self._add_jobs_argument(parser)

    def _prepare_region(self, options, config):
        scenario_config = config.scenario

        if options['sites'] and options['synthetic']:
            self._raise_error(
                InvalidArgumentsError(INVALID_RANGE_ERROR.format(reason='--sites вместе с --synthetic'))
            )

        if options['sites']:
            self._check_exists(options['sites'])
            region = region_from_sites(
                read_sites_csv(options['sites']),
                n_dus=scenario_config.n_dus,
                extent_km=scenario_config.extent_km,
                seed=options['seed'],
                config=scenario_config,
            )
        elif options['synthetic']:
            region = generate_synthetic_region(
                n_sites=scenario_config.n_sites,
                n_dus=scenario_config.n_dus,
                extent_km=scenario_config.extent_km,
                seed=options['seed'],
                config=scenario_config,
            )
        else:
            self._check_exists(options['region'])
            region = read_region(options['region'])

        if options['region'] and (options['sites'] or options['synthetic']):
            atomic_write_text(options['region'], region.dumps())

        if options['sites_csv']:
            atomic_write_text(options['sites_csv'], sites_frame(region.sites).to_csv(index=False))

        return region

    def _handle(self, *args, **options):
        solvers = [solver.strip() for solver in options['solvers'].split(',') if solver.strip()]
        for solver in solvers:
            get_solver_class(solver)

        if options['samples'] < 1:
            self._raise_error(
                InvalidArgumentsError(INVALID_RANGE_ERROR.format(reason=f'--samples={options["samples"]}'))
            )

        config = self._prepare_run_config(options)
        hour = options['hour'] if options['hour'] is not None else config.scenario.peak_hour
        check_hour(hour)

        region = self._prepare_region(options, config)
        model, reward_threshold = self._prepare_model(options['model'])

        manager = ScenarioRunnerManager()
        manager.run(
            region=region,
            du_ids=options['du_ids'],
            hour=hour,
            samples=options['samples'],
            solvers=solvers,
            seed=options['seed'],
            jobs=self._prepare_jobs(options['jobs']),
            model=model,
            reward_threshold=reward_threshold,
            search_config=self._prepare_search_config(config),
        )
        self._raise_result_errors(manager.result)

        table = manager.report()

        if options['report']:
            report_path = Path(options['report'])
            atomic_write_text(
                report_path,
                to_json({
                    'schema_version': ARTIFACT_SCHEMA_VERSION,
                    'hour': hour,
                    'samples': options['samples'],
                    'solvers': solvers,
                    'table': table.to_dict(orient='records'),
                }),
            )
            atomic_write_text(report_path.with_suffix('.csv'), table.to_csv(index=False))
        else:
            self.stdout.write(table.to_string(index=False))
