import os
import sys

import django
from django.core.management import (
    execute_from_command_line,
)

from ranked_packing.consts import (
    ARTIFACT_SCHEMA_VERSION,
    CHECKPOINT_SCHEMA_VERSION,
    PACKAGE_VERSION,
)


def main(argv=None):
    """
    Точка входа консольной команды ranked-packing
    """
    argv = list(sys.argv if argv is None else argv)

    if argv[1:] == ['--version']:
        sys.stdout.write(
            f'ranked-packing {PACKAGE_VERSION} '
            f'(artifact schema {ARTIFACT_SCHEMA_VERSION}, checkpoint schema {CHECKPOINT_SCHEMA_VERSION})\n'
        )

        return

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ranked_packing.settings')
    django.setup()

    execute_from_command_line(argv)


if __name__ == '__main__':
    main()
