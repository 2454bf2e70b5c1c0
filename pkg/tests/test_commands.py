import pytest
from django.core.management import (
    call_command,
)
from django.core.management.base import (
    CommandError,
)

from ranked_packing.__main__ import (
    main,
)
from ranked_packing.consts import (
    PACKAGE_VERSION,
)
from ranked_packing.packing.instances import (
    dump_instance,
    make_instance,
)
from ranked_packing.scenario.sites import (
    generate_synthetic_region,
    read_region,
    sites_frame,
)
from ranked_packing.utils import (
    atomic_write_text,
    read_json,
)


TINY_TRAINING = [
    'seed=3',
    'deterministic=true',
    'net.conv_layers=1',
    'net.channels=4',
    'search.simulations=2',
    'train.iterations=1',
    'train.episodes_per_iteration=1',
    'train.train_steps=1',
    'train.batch_size=2',
    'train.width=3',
    'train.n_items=2',
    'train.h_star_min=2',
    'train.h_star_max=3',
]


def _exit_code(name, **options):
    with pytest.raises(CommandError) as error:
        call_command(name, **options)

    return error.value.returncode


def _generate(out, **options):
    call_command('generate', count=options.pop('count', 2), n_items=3, width=4, h_min=2, h_max=4, out=str(out), **options)


def test_generate_writes_instances_and_manifest(tmp_path):
    _generate(tmp_path, seed=1)

    manifest = read_json(tmp_path / 'manifest.json')

    assert manifest['count'] == 2
    assert [entry['file'] for entry in manifest['instances']] == ['instance_00000.json', 'instance_00001.json']
    assert all(2 <= entry['h_star'] <= 4 for entry in manifest['instances'])


def test_generate_is_deterministic(tmp_path):
    _generate(tmp_path / 'first', seed=7)
    _generate(tmp_path / 'second', seed=7)

    for name in ('manifest.json', 'instance_00000.json', 'instance_00001.json'):
        assert (tmp_path / 'first' / name).read_bytes() == (tmp_path / 'second' / name).read_bytes()


def test_generate_in_pool_matches_sequential(tmp_path):
    _generate(tmp_path / 'sequential', count=3, seed=2, jobs=1)
    _generate(tmp_path / 'pool', count=3, seed=2, jobs=2)

    for name in ('manifest.json', 'instance_00000.json', 'instance_00002.json'):
        assert (tmp_path / 'sequential' / name).read_bytes() == (tmp_path / 'pool' / name).read_bytes()


def test_generate_zero_instances_writes_manifest_only(tmp_path):
    _generate(tmp_path, count=0)

    assert [path.name for path in tmp_path.iterdir()] == ['manifest.json']
    assert read_json(tmp_path / 'manifest.json')['instances'] == []


def test_generate_rejects_negative_count(tmp_path):
    assert _exit_code('generate', count=-1, out=str(tmp_path)) == 2


def test_generate_rejects_too_many_items_and_writes_nothing(tmp_path):
    out = tmp_path / 'set'

    assert _exit_code('generate', count=3, n_items=10, width=3, h_min=2, h_max=3, out=str(out)) == 2
    assert not out.exists()


def test_generate_rejects_h_max_above_default_height(tmp_path):
    out = tmp_path / 'set'

    assert _exit_code('generate', count=20, n_items=5, width=8, out=str(out)) == 2
    assert not out.exists()


def test_solve_with_exact_solver(tmp_path, instance_file):
    out = tmp_path / 'packing.json'

    call_command('solve', solver='exact', instance=str(instance_file), out=str(out))

    packing = read_json(out)
    assert packing['h_tilde'] == 3
    assert packing['solver'] == 'exact'
    assert packing['status'] == 'packed'
    assert len(packing['placements']) == 3


def test_solve_rejects_unknown_solver(instance_file):
    assert _exit_code('solve', solver='tabu', instance=str(instance_file)) == 5


def test_solve_reports_missing_instance(tmp_path):
    assert _exit_code('solve', solver='exact', instance=str(tmp_path / 'absent.json')) == 3


def test_solve_selfplay_requires_model(instance_file):
    assert _exit_code('solve', solver='selfplay', instance=str(instance_file)) == 8


def test_solve_reports_missing_checkpoint(tmp_path, instance_file):
    assert _exit_code(
        'solve', solver='selfplay', instance=str(instance_file), model=str(tmp_path / 'iter_0001.bin'),
    ) == 3


def test_solve_mcts_dumps_first_move_tree(tmp_path, instance_file):
    tree_path = tmp_path / 'tree.json'

    call_command(
        'solve',
        solver='mcts',
        instance=str(instance_file),
        simulations=8,
        out=str(tmp_path / 'packing.json'),
        dump_tree=str(tree_path),
    )

    tree = read_json(tree_path)
    assert tree['step'] == 0
    assert tree['visits'] == 9
    assert sum(edge['visits'] for edge in tree['edges']) == 8


def test_render_writes_svg(tmp_path, instance_file):
    packing_path = tmp_path / 'packing.json'
    svg_path = tmp_path / 'packing.svg'
    call_command('solve', solver='hvraa', instance=str(instance_file), out=str(packing_path))

    call_command('render', packing=str(packing_path), out=str(svg_path))

    assert '<svg' in svg_path.read_text()


def test_render_reports_missing_packing(tmp_path):
    assert _exit_code('render', packing=str(tmp_path / 'absent.json'), out=str(tmp_path / 'out.svg')) == 3


def test_eval_writes_json_and_csv_report(tmp_path):
    instances = tmp_path / 'set'
    report = tmp_path / 'report.json'
    _generate(instances, seed=4)

    call_command('eval', solver='hvraa', instances=str(instances), report=str(report), oracle=True)

    data = read_json(report)
    assert data['summary']['n_instances'] == 2
    assert data['summary']['solver'] == 'hvraa'
    assert [row['instance'] for row in data['instances']] == ['instance_00000', 'instance_00001']
    assert all(row['oracle_height'] is not None for row in data['instances'])
    assert report.with_suffix('.csv').read_text().startswith('instance,solver,')


def test_eval_reports_missing_directory(tmp_path):
    assert _exit_code('eval', solver='hvraa', instances=str(tmp_path / 'absent')) == 3


def test_eval_rejects_bad_override(tmp_path):
    instances = tmp_path / 'set'
    _generate(instances)

    assert _exit_code('eval', solver='hvraa', instances=str(instances), overrides=['search.c_puct=-1']) == 8


def test_scenario_on_synthetic_region(tmp_path):
    report = tmp_path / 'scenario.json'
    region_path = tmp_path / 'region.json'

    call_command(
        'scenario',
        synthetic=True,
        region=str(region_path),
        overrides=['scenario.n_sites=12', 'scenario.n_dus=2'],
        samples=1,
        solvers='hvraa,lego',
        report=str(report),
        seed=5,
    )

    data = read_json(report)
    assert data['hour'] == 17
    assert data['solvers'] == ['hvraa', 'lego']
    assert [row['solver'] for row in data['table']] == ['hvraa', 'lego']
    assert set(data['table'][0]) == {'solver', 'du0_r_mean', 'du0_u_mean', 'du1_r_mean', 'du1_u_mean'}
    assert region_path.exists()
    assert report.with_suffix('.csv').exists()


def test_scenario_rejects_unknown_solver(tmp_path):
    assert _exit_code('scenario', synthetic=True, solvers='hvraa,greedy') == 5


def test_scenario_rejects_hour_outside_day():
    assert _exit_code('scenario', synthetic=True, hour=24, solvers='hvraa') == 8


def _write_sites_csv(path):
    sites = generate_synthetic_region(n_sites=12, n_dus=1, seed=4).sites
    atomic_write_text(path, sites_frame(sites).to_csv(index=False))

    return sites


def test_scenario_on_sites_from_csv(tmp_path):
    sites_path = tmp_path / 'sites.csv'
    region_path = tmp_path / 'region.json'
    sites = _write_sites_csv(sites_path)

    call_command(
        'scenario',
        sites=str(sites_path),
        region=str(region_path),
        overrides=['scenario.n_dus=2'],
        samples=1,
        solvers='hvraa',
        report=str(tmp_path / 'scenario.json'),
        seed=5,
    )

    region = read_region(region_path)
    assert [site.id for site in region.sites] == [site.id for site in sites]
    assert [du.label for du in region.dus] == ['du0', 'du1']
    assert all(len(du.connected_rus) == 10 for du in region.dus)


def test_scenario_rejects_missing_sites_csv(tmp_path):
    assert _exit_code('scenario', sites=str(tmp_path / 'absent.csv'), solvers='hvraa') == 3


def test_scenario_rejects_sites_with_synthetic(tmp_path):
    sites_path = tmp_path / 'sites.csv'
    _write_sites_csv(sites_path)

    assert _exit_code('scenario', sites=str(sites_path), synthetic=True, solvers='hvraa') == 2


def test_train_then_solve_with_checkpoint(tmp_path):
    run_dir = tmp_path / 'run'
    instance_path = tmp_path / 'instance.json'
    atomic_write_text(instance_path, dump_instance(make_instance([(1, 2), (2, 2)], w_star=3)))

    call_command('train', overrides=TINY_TRAINING, out=str(run_dir))

    checkpoint = run_dir / 'checkpoints' / 'iter_0001.bin'
    assert checkpoint.exists()

    call_command(
        'solve',
        solver='selfplay',
        instance=str(instance_path),
        model=str(checkpoint),
        simulations=4,
        out=str(tmp_path / 'packing.json'),
    )

    packing = read_json(tmp_path / 'packing.json')
    assert packing['solver'] == 'selfplay'
    assert packing['height'] == 3


def test_train_rejects_invalid_config(tmp_path):
    assert _exit_code('train', overrides=['train.percentile=0'], out=str(tmp_path)) == 8


def test_version_flag(capsys):
    main(['ranked-packing', '--version'])

    assert capsys.readouterr().out.startswith(f'ranked-packing {PACKAGE_VERSION} ')
