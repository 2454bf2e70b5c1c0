STRICT_SAVING_ERROR = (
    'Не все запускаемые объекты отработали без ошибок, артефакты не сохранены'
)

# Экземпляры

INSTANCE_EMPTY_ERROR = 'Экземпляр должен содержать хотя бы один предмет'

INSTANCE_IDS_ERROR = (
    'Идентификаторы предметов должны быть уникальными и идти подряд от 0 до N-1'
)

ITEM_SIZE_ERROR = (
    'Предмет {item_id} имеет недопустимый размер {w}x{h}: стороны должны быть '
    'не меньше 1, ширина не больше W*={w_star}, высота не больше H\'={height}'
)

WIDTH_BUDGET_ERROR = 'Бюджет задержки W* должен быть не меньше 1, получено {w_star}'

SLICING_RANGE_ERROR = (
    'Невозможно разрезать прямоугольник {w_star}x{h_star} на {n_items} '
    'предметов со сторонами не меньше 1'
)

INSTANCE_FILE_FORMAT_ERROR = 'Файл экземпляра {path} имеет неверный формат: {reason}'

# Сетка и действия

INFEASIBLE_ALLOCATION_ERROR = (
    'Недостаточно свободных строк для предмета {item_id} в позиции x={x}: '
    'требуется {h}, доступно {available}'
)

ILLEGAL_ACTION_ERROR = 'Недопустимое действие (предмет {item_id}, x={x}) в текущем состоянии'

DEAD_STATE_UTILIZATION_ERROR = (
    'Использование ресурсов не определено для состояния, в котором упакованы не все предметы'
)

# Точный решатель

ORACLE_INFEASIBLE_ERROR = (
    'Не существует полной упаковки высотой не более h_cap={h_cap}'
)

ORACLE_BUDGET_EXCEEDED_ERROR = (
    'Превышен лимит узлов точного решателя ({node_limit}), результат не определен'
)

# Нейронная сеть и обучение

EMPTY_LEGAL_MASK_ERROR = 'Маска допустимых действий не содержит ни одного допустимого действия'

NON_FINITE_LOSS_ERROR = 'Получено неконечное значение функции потерь на итерации {iteration}'

EMPTY_MINIBATCH_ERROR = 'Мини-пакет для шага обучения не может быть пустым'

INCOMPATIBLE_CHECKPOINT_ERROR = (
    'Контрольная точка {path} имеет версию схемы {found}, ожидается {expected}'
)

CHECKPOINT_SHAPE_ERROR = (
    'Контрольная точка рассчитана на пространство действий {found}, '
    'а экземпляр требует {expected}'
)

# Поиск

SIMULATIONS_ERROR = 'Количество симуляций должно быть не меньше 1, получено {simulations}'

TERMINAL_ROOT_ERROR = 'Поиск невозможен из терминального состояния'

# Конфигурация

UNKNOWN_CONFIG_KEYS_ERROR = 'Неизвестные ключи конфигурации в разделе "{section}": {keys}'

CONFIG_VALUE_ERROR = 'Недопустимое значение конфигурации {key}: {reason}'

CONFIG_OVERRIDE_FORMAT_ERROR = (
    'Переопределение "{override}" должно иметь вид раздел.ключ=значение'
)

PERCENTILE_ERROR = 'Перцентиль должен лежать в интервале (0, 100), получено {alpha}'

# Решатели

UNKNOWN_SOLVER_ERROR = 'Неизвестный решатель "{solver}", допустимые: {choices}'

MODEL_REQUIRED_ERROR = 'Решателю "{solver}" требуется контрольная точка модели (--model)'

# Сценарий ORAN

NOT_ENOUGH_SITES_ERROR = 'Для подключения {k} RU требуется не меньше {k} сайтов, доступно {available}'

SITE_PARAMETERS_ERROR = (
    'Сайт {site_id}: требуется mu > 0, delta >= 0 и mu - delta >= 1 '
    '(mu={mu}, delta={delta})'
)

HOUR_RANGE_ERROR = 'Час должен лежать в интервале [0, 24), получено {hour}'

UNKNOWN_DU_ERROR = 'DU с идентификатором {du_id} отсутствует в регионе'

LATENCY_VIOLATION_WARNING = (
    'DU %s: задержка фронтхола превышает %.1f мкс для RU %s'
)

DISTANCE_ERROR = 'Расстояние не может быть отрицательным, получено {distance}'

REDUCTION_FACTOR_ERROR = 'Коэффициент снижения скорости F должен быть не меньше 1, получено {factor}'

# Команды

MISSING_FILE_ERROR = 'Файл или каталог {path} не найден'

INVALID_RANGE_ERROR = 'Недопустимый диапазон параметров: {reason}'
