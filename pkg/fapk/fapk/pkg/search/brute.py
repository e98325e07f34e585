from itertools import combinations

from fapk.pkg.common.exceptions import OracleLimitError
from fapk.pkg.search.settings import BRUTE_FORCE_MAX_LINKS


def _assign_all(instance, paths, domains, assignment):
    """Depth-first over `paths`, narrowing neighbour domains as it goes."""
    if not paths:
        return True
    path, rest = paths[0], paths[1:]
    for frequency in sorted(domains[path]):
        narrowed = {}
        feasible = True
        for neighbour, gap in instance.neighbours(path):
            if neighbour not in domains or neighbour in assignment:
                continue
            kept = {f for f in domains[neighbour]
                    if abs(f - frequency) >= gap}
            if not kept:
                feasible = False
                break
            narrowed[neighbour] = kept
        if not feasible:
            continue
        saved = {p: domains[p] for p in narrowed}
        domains.update(narrowed)
        assignment[path] = frequency
        if _assign_all(instance, rest, domains, assignment):
            return True
        del assignment[path]
        domains.update(saved)
    return False


def satisfy_links(instance, link_ids):
    """
    :return: dict path -> frequency assigning every path of `link_ids`
    with all their mutual constraints met, or None
    """
    paths = [path for link in link_ids for path in instance.links[link].paths]
    domains = {path: set(instance.domains[path]) for path in paths}
    if any(not domain for domain in domains.values()):
        return None
    assignment = {}
    if _assign_all(instance, paths, domains, assignment):
        return assignment
    return None


def brute_force_solve(instance):
    """
    Largest set of links that can be assigned together, by enumerating link
    subsets from the largest down.
    :param instance: Instance with at most 6 links
    :return: (link count, witness assignment path -> frequency)
    """
    if instance.link_count > BRUTE_FORCE_MAX_LINKS:
        raise OracleLimitError(
            'Exhaustive search is limited to %d links, got %d'
            % (BRUTE_FORCE_MAX_LINKS, instance.link_count))
    link_ids = range(instance.link_count)
    for size in range(instance.link_count, 0, -1):
        for subset in combinations(link_ids, size):
            witness = satisfy_links(instance, subset)
            if witness is not None:
                return size, witness
    return 0, {}
