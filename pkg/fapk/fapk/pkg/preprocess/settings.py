# Reduced domains of the paths incident to a site with 8 links: transmitters
# take the two outer values of each small IPE, receivers the two large IPEs.
CART8_TX_DOMAIN = (
    40000, 40140, 41000, 41140, 42000, 42140, 43000, 43140,
)
CART8_RX_DOMAIN = (
    44000, 44070, 44140, 44210, 45000, 45070, 45140, 45210,
)

# Receivers an IPE can hold under rr <= 70: every member.
SMALL_IPE_RX_LIMIT = 3
LARGE_IPE_RX_LIMIT = 4
IPE_TX_LIMIT = 2
