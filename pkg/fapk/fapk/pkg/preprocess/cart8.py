import logging
from dataclasses import dataclass

from fapk.pkg.model.instance import cart8_sites
from fapk.pkg.preprocess.settings import CART8_RX_DOMAIN, CART8_TX_DOMAIN

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionWarning(object):
    path: int
    transmitter: int
    receiver: int

    def __str__(self):
        return ('Cart8 reduction of path %d (%d -> %d) leaves no frequency, '
                'keeping its domain' % (self.path, self.transmitter,
                                        self.receiver))


@dataclass(frozen=True)
class ReductionOutcome(object):
    """
    `domains` holds every path domain after reduction, `reduced` the ids of
    the paths that actually changed.
    """
    instance: object
    domains: tuple
    reduced: tuple
    warnings: tuple

    @property
    def skipped(self):
        return tuple(warning.path for warning in self.warnings)


def cart8_reduce(instance):
    """
    Narrow the domains of the paths incident to sites with 8 links.
    A path whose reduced domain would be empty (for example between two
    Cart8 sites) keeps its domain and is reported as a warning.
    :param instance: Instance
    :return: ReductionOutcome
    """
    cart8 = set(cart8_sites(instance))
    domains = list(instance.domains)
    reduced, warnings = [], []
    tx_domain, rx_domain = set(CART8_TX_DOMAIN), set(CART8_RX_DOMAIN)

    for path in instance.paths:
        allowed = None
        if path.transmitter in cart8:
            allowed = set(tx_domain)
        if path.receiver in cart8:
            allowed = rx_domain if allowed is None else allowed & rx_domain
        if allowed is None:
            continue

        domain = tuple(f for f in domains[path.id] if f in allowed)
        if not domain:
            warning = ReductionWarning(
                path.id, path.transmitter, path.receiver)
            logger.warning(str(warning))
            warnings.append(warning)
        elif domain != domains[path.id]:
            domains[path.id] = domain
            reduced.append(path.id)

    if reduced:
        instance = instance.with_domains(
            {path: domains[path] for path in reduced})
    logger.info('Cart8 sites: %d, reduced paths: %d, skipped paths: %d',
                len(cart8), len(reduced), len(warnings))
    return ReductionOutcome(
        instance=instance, domains=tuple(domains),
        reduced=tuple(reduced), warnings=tuple(warnings),
    )
