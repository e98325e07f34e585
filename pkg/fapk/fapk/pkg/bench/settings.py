from collections import namedtuple

from fapk.pkg.bench.choices import ScenarioGroup

GroupSize = namedtuple('GroupSize', 'links sites cart8')

# Published sizes of the four scenario groups; site counts keep the mean
# degree of the originals (about 3.6 links per site).
GROUP_SIZES = {
    ScenarioGroup.G01: GroupSize(links=150, sites=84, cart8=2),
    ScenarioGroup.G10: GroupSize(links=50, sites=28, cart8=1),
    ScenarioGroup.G20: GroupSize(links=100, sites=56, cart8=2),
    ScenarioGroup.G30: GroupSize(links=300, sites=168, cart8=4),
}
INSTANCES_PER_GROUP = {
    ScenarioGroup.G01: 6,
    ScenarioGroup.G10: 10,
    ScenarioGroup.G20: 10,
    ScenarioGroup.G30: 10,
}

MIN_PATHS, MAX_PATHS = 100, 600
MIN_SITES, MAX_SITES = 28, 168
MAX_CONSTRAINTS = 14755

# Degree cap of sites that must not turn into Cart8 sites.
PLAIN_SITE_MAX_LINKS = 7

RR_GAP_SPREAD = 10
RR_GAP_FLOOR = 40
FAR_FIELD_GAP_FLOOR = 10

# Random draws before falling back to enumerating the admissible pairs.
EDGE_SAMPLING_ATTEMPTS = 200

REPORT_COLUMNS = (
    'group', 'n', 'mode', 'strategy', 'budget',
    'mean_links', 'solved', 'blockages', 'filtered', 'elapsed',
)
