# Версия пакета
PACKAGE_VERSION = '0.2.0'

# Версия схем файлов экземпляров, результатов упаковки и отчетов
ARTIFACT_SCHEMA_VERSION = 1

# Версия схемы контрольных точек нейронной сети
CHECKPOINT_SCHEMA_VERSION = 1

# Максимальная награда MDP, достигается при H~ = H*
MAX_REWARD = 1.0

# Нижняя граница вероятностей внутри логарифма функции потерь
LOG_PROBABILITY_FLOOR = 1e-12

# Скорость света в вакууме, м/с
SPEED_OF_LIGHT = 299792458.0

# Допустимая задержка фронтхола Ethernet, с
FRONTHAUL_LATENCY_BOUND = 100e-6

# Коэффициент снижения скорости в оптоволокне
FIBRE_REDUCTION_FACTOR = 2.5

# Количество часов в суточном профиле нагрузки
HOURS_PER_DAY = 24

# Час пиковой нагрузки
PEAK_HOUR = 17

# Количество ближайших RU, подключаемых к DU
DEFAULT_CONNECTED_RUS = 10

# Ограничение количества узлов точного решателя
DEFAULT_ORACLE_NODE_LIMIT = 2_000_000

# Рекомендуемые размеры экземпляров для точного решателя
ORACLE_TRACTABLE_MAX_ITEMS = 6
ORACLE_TRACTABLE_MAX_WIDTH = 8
ORACLE_TRACTABLE_MAX_HEIGHT = 8

# Имена файлов каталога обучения
RUN_CONFIG_FILE_NAME = 'config.json'
RUN_METRICS_FILE_NAME = 'metrics.csv'
RUN_CHECKPOINTS_DIR_NAME = 'checkpoints'
CHECKPOINT_FILE_NAME_TEMPLATE = 'iter_{iteration:04d}.bin'

# Имя файла манифеста сгенерированных экземпляров
MANIFEST_FILE_NAME = 'manifest.json'

# Шаблон имени файла экземпляра
INSTANCE_FILE_NAME_TEMPLATE = 'instance_{index:05d}.json'

# Колонки журнала метрик обучения
METRICS_COLUMNS = (
    'iteration',
    'mean_reward',
    'reward_std',
    'optimality_ratio',
    'loss',
    'wall_seconds',
)

# Качественная палитра для отрисовки упаковок
ITEM_PALETTE = (
    '#1f77b4',
    '#ff7f0e',
    '#2ca02c',
    '#d62728',
    '#9467bd',
    '#8c564b',
    '#e377c2',
    '#7f7f7f',
    '#bcbd22',
    '#17becf',
    '#aec7e8',
    '#ffbb78',
)

# Ключи независимых потоков случайных чисел запуска
EPISODE_STREAM_KEY = 0
TRAINING_STREAM_KEY = 1
MODEL_STREAM_KEY = 2
EVALUATION_STREAM_KEY = 3
SCENARIO_STREAM_KEY = 4
GENERATION_STREAM_KEY = 5
