"""
Настройки для автономного запуска команд пакета без проекта Django.

Проект, подключающий приложение ranked_packing, может задать собственный
словарь RANKED_PACKING и конфигурацию LOGGING.
"""
import os


SECRET_KEY = os.environ.get('RANKED_PACKING_SECRET_KEY', 'ranked-packing-standalone')

DEBUG = False

INSTALLED_APPS = [
    'ranked_packing',
]

DATABASES = {}

USE_TZ = True

RANKED_PACKING = {
    # Детерминированные алгоритмы torch во всем процессе
    'DETERMINISTIC_TORCH': False,
    # Количество процессов пула по умолчанию для generate и eval
    'DEFAULT_JOBS': int(os.environ.get('RANKED_PACKING_JOBS', 1)),
    # Уровень журнала пакета при --verbosity 1
    'LOG_LEVEL': os.environ.get('RANKED_PACKING_LOG_LEVEL', 'INFO'),
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'ranked_packing': {
            'handlers': ['console'],
            'level': RANKED_PACKING['LOG_LEVEL'],
            'propagate': False,
        },
    },
}
