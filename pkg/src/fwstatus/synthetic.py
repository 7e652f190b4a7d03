"""Synthetic firewall exports for tests and benchmarks."""

from __future__ import annotations

import random
from typing import Iterator

from .log_model import HEADER_NAMES, MONTHS


def host_pool(n: int, rng: random.Random) -> list[str]:
    """Hostnames with deliberate prefix overlaps (``ns4.foo.co`` vs ``ns4.foo.com``)."""
    stems = ["ns4.foo", "fwfoomain01.foo", "corelinkmain01.foo", "gwt.lab.foo",
             "dhcp-100-101-167", "webwebmain01.foo", "mlink.foo"]
    tlds = ["co", "com", "com.au", "net", "net.nz", "co.uk", ""]
    hosts = set()
    while len(hosts) < n:
        stem = rng.choice(stems) + (str(rng.randrange(50)) if rng.random() < 0.5 else "")
        tld = rng.choice(tlds)
        hosts.add(f"{stem}.{tld}" if tld else stem)
    return sorted(hosts)


def generate_lines(n: int, distinct: int = 50, seed: int = 0,
                   header: bool = True, log_fraction: float = 0.9) -> Iterator[str]:
    """Yield ``n`` export lines (plus an optional header), each without terminator."""
    rng = random.Random(seed)
    hosts = host_pool(distinct, rng)
    origs = hosts[: max(1, distinct // 10)]
    services = [("udp", "ntp-udp"), ("tcp", "telnet"), ("tcp", "smtp"), ("icmp", ""),
                ("udp", "177"), ("tcp", "tcpmux"), ("udp", "snmp-trap"), ("udp", "nbname")]
    if header:
        yield ";".join(HEADER_NAMES)
    for i in range(1, n + 1):
        day = rng.randint(1, 28)
        date = f"{day}{rng.choice(MONTHS)}2006"
        time = f"{rng.randint(0, 23)}:{rng.randint(0, 59):02d}:{rng.randint(0, 59):02d}"
        orig = rng.choice(origs)
        if rng.random() >= log_fraction:
            yield (f"{i};{date};{time};{orig};control;ctl;;daemon;inbound;"
                   ";;;;;;;;;;;started sending log to localhost")
            continue
        proto, service = rng.choice(services)
        if_dir = "inbound" if rng.random() < 0.95 else "outbound"
        fields = [str(i), date, time, orig, "log", rng.choice(["accept", "drop"]), "",
                  f"hme{rng.randint(0, 1)}", if_dir, proto, rng.choice(hosts),
                  rng.choice(hosts), service, service or str(rng.randint(1, 65535)),
                  str(rng.randint(40, 1500)), str(rng.randint(1, 9)), "", "", "", "", ""]
        yield ";".join(fields)
