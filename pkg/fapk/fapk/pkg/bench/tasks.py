import logging

from fapk.celery import app
from fapk.pkg.model.fileformat import read_instance
from fapk.pkg.search.bnb import solve
from fapk.pkg.search.serializers import SearchConfigSerializer

logger = logging.getLogger(__name__)


@app.task
def solve_run(instance_text: str, config_data: dict, group: str, seed: int):
    """
    One benchmark run. Failures come back as a run carrying `error`
    so the matrix keeps going.
    """
    run = {
        'group': group, 'seed': seed, 'n': None,
        'mode': config_data.get('mode'),
        'strategy': config_data.get('strategy'),
        'budget': config_data.get('budget'),
        'assigned_links': 0, 'solved': False, 'blockages': 0,
        'filtered': 0, 'elapsed': 0.0, 'error': None,
    }
    try:
        instance = read_instance(instance_text)
        run['n'] = instance.link_count
        serializer = SearchConfigSerializer(data=config_data)
        serializer.is_valid(raise_exception=True)
        result = solve(instance, serializer.save())
    except Exception as e:
        logger.exception('Run failed: group=%s seed=%s mode=%s strategy=%s',
                         group, seed, run['mode'], run['strategy'])
        run['error'] = str(e)
        return run

    run.update(
        assigned_links=result.assigned_links, solved=result.solved,
        blockages=result.blockages, filtered=result.filtered,
        elapsed=result.elapsed,
    )
    logger.info('Run done: group=%s seed=%s %s/%s budget=%s -> %d/%d links',
                group, seed, run['mode'], run['strategy'], run['budget'],
                result.assigned_links, result.link_count)
    return run
