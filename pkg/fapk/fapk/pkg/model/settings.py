# RITA spectrum, one tuple per inter-plane (IPE); the first four are small.
RITA_IPES = (
    (40000, 40070, 40140),
    (41000, 41070, 41140),
    (42000, 42070, 42140),
    (43000, 43070, 43140),
    (44000, 44070, 44140, 44210),
    (45000, 45070, 45140, 45210),
)
LARGE_IPE_SIZE = 4

DUPLEX_GAP = 600
TX_RX_GAP = 220
TX_TX_GAP = 100

MAX_SITE_LINKS = 8

FORMAT_MAGIC = 'fapk'
FORMAT_VERSION = 1
