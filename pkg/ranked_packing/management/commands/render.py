from ranked_packing.management.base import (
    BaseRankedPackingCommand,
)
from ranked_packing.rendering import (
    render_packing_file,
)


class Command(BaseRankedPackingCommand):
    """
    Отрисовка результата упаковки в SVG
    """

    help = (
        """
        Рисует упаковку из JSON-файла результата --packing: фрагменты одного предмета одного цвета, пунктиром 
        показан оптимизированный контейнер W~ x H~.
        """
    )

    def add_arguments(self, parser):
        parser.add_argument(
            '--packing',
            dest='packing',
            action='store',
            type=str,
            help='JSON-файл результата упаковки',
            required=True,
        )

        parser.add_argument(
            '--out',
            dest='out',
            action='store',
            type=str,
            help='SVG-файл',
            required=True,
        )

    def _handle(self, *args, **options):
        self._check_exists(options['packing'])

        self._write_output(options['out'], render_packing_file(options['packing']))
