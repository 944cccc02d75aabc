"""Direct linkage via pure-power complete intersections."""
