# Largest frequency block enumerated role by role by the synchronous count;
# bigger blocks go to the exhaustive search.
SYNC_BLOCK_LIMIT = 10

CAPACITY_CACHE_SIZE = 1 << 16
