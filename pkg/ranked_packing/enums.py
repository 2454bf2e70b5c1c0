class SolverEnum:
    """
    Перечисление решателей задачи упаковки
    """
    SELFPLAY = 'selfplay'
    MCTS = 'mcts'
    HVRAA = 'hvraa'
    LEGO = 'lego'
    RANDOM = 'random'
    EXACT = 'exact'

    values = {
        SELFPLAY: 'Нейронная сеть с MCTS, обученная самоигрой',
        MCTS: 'MCTS с Монте-Карло-прогонами',
        HVRAA: 'Эвристика виртуального распределения ресурсов',
        LEGO: 'Эвристика Lego',
        RANDOM: 'Случайный выбор допустимых действий',
        EXACT: 'Точный перебор',
    }


class PackingStatusEnum:
    """
    Перечисление статусов результата упаковки
    """
    PACKED = 'packed'
    DEAD = 'dead'

    values = {
        PACKED: 'Все предметы упакованы',
        DEAD: 'Не осталось допустимых действий',
    }


class ArchitectureEnum:
    """
    Перечисление архитектур сети стратегии и ценности
    """
    PLAIN = 'plain'
    IMPALA = 'impala'

    values = {
        PLAIN: 'Последовательность сверток',
        IMPALA: 'Сверточная сеть с остаточными блоками',
    }


class DTypeEnum:
    """
    Перечисление точностей вычислений сети
    """
    FLOAT32 = 'float32'
    FLOAT64 = 'float64'

    values = {
        FLOAT32: 'Одинарная точность',
        FLOAT64: 'Двойная точность',
    }
