#pragma once

// Generated from data/*.json; keep in sync (a test compares them).

namespace hfk::builtin_text {

inline constexpr const char* unknot_quotient = R"json({
  "name": "unknot-quotient",
  "alpha_orders": [["a", "e", "c", "b"]],
  "beta_orders": [["a", "e", "c", "b"]],
  "intersections": [
    {"id": "a", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "b", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "c", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "e", "alpha": 0, "beta": 0, "sign": 1}
  ],
  "regions": [
    {"id": "r_abce", "boundary": [{"arc": ["alpha", 0, 0], "direction": 1}, {"arc": ["beta", 0, 1], "direction": 1}, {"arc": ["alpha", 0, 2], "direction": 1}, {"arc": ["beta", 0, 3], "direction": 1}], "corners": [["a", 0], ["e", 1], ["c", 0], ["b", 1]]},
    {"id": "r_abce_2", "boundary": [{"arc": ["alpha", 0, 1], "direction": -1}, {"arc": ["beta", 0, 0], "direction": -1}, {"arc": ["alpha", 0, 3], "direction": -1}, {"arc": ["beta", 0, 2], "direction": -1}], "corners": [["c", 2], ["e", 3], ["a", 2], ["b", 3]]},
    {"id": "r_w0", "boundary": [{"arc": ["alpha", 0, 0], "direction": -1}, {"arc": ["beta", 0, 0], "direction": 1}], "corners": [["e", 2], ["a", 3]]},
    {"id": "r_w1", "boundary": [{"arc": ["alpha", 0, 3], "direction": 1}, {"arc": ["beta", 0, 3], "direction": -1}], "corners": [["b", 0], ["a", 1]]},
    {"id": "r_z0", "boundary": [{"arc": ["alpha", 0, 2], "direction": -1}, {"arc": ["beta", 0, 2], "direction": 1}], "corners": [["b", 2], ["c", 3]]},
    {"id": "r_z1", "boundary": [{"arc": ["alpha", 0, 1], "direction": 1}, {"arc": ["beta", 0, 1], "direction": -1}], "corners": [["e", 0], ["c", 1]]}
  ],
  "basepoints": [
    {"id": "w0", "kind": "w", "region": "r_w0"},
    {"id": "z0", "kind": "z", "region": "r_z0"},
    {"id": "w1", "kind": "w", "region": "r_w1"},
    {"id": "z1", "kind": "z", "region": "r_z1"}
  ],
  "link_components": [
    {"name": "K", "pairs": [["z1", "w1"]]},
    {"name": "U", "pairs": [["z0", "w0"]]}
  ]
}
)json";

inline constexpr const char* unknot_cover = R"json({
  "name": "unknot-cover",
  "alpha_orders": [["a^1", "e^2", "c^2", "b^1"], ["c^1", "b^2", "a^2", "e^1"]],
  "beta_orders": [["e^1", "a^1", "b^1", "c^1"], ["b^2", "c^2", "e^2", "a^2"]],
  "intersections": [
    {"id": "a^1", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "a^2", "alpha": 1, "beta": 1, "sign": 1},
    {"id": "b^1", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "b^2", "alpha": 1, "beta": 1, "sign": -1},
    {"id": "c^1", "alpha": 1, "beta": 0, "sign": 1},
    {"id": "c^2", "alpha": 0, "beta": 1, "sign": 1},
    {"id": "e^1", "alpha": 1, "beta": 0, "sign": -1},
    {"id": "e^2", "alpha": 0, "beta": 1, "sign": -1}
  ],
  "regions": [
    {"id": "r_a1b1c1e1", "boundary": [{"arc": ["alpha", 0, 3], "direction": -1}, {"arc": ["beta", 0, 2], "direction": 1}, {"arc": ["alpha", 1, 3], "direction": -1}, {"arc": ["beta", 0, 0], "direction": 1}], "corners": [["a^1", 2], ["b^1", 3], ["c^1", 2], ["e^1", 3]]},
    {"id": "r_a1b1c2e2", "boundary": [{"arc": ["alpha", 0, 0], "direction": 1}, {"arc": ["beta", 1, 1], "direction": -1}, {"arc": ["alpha", 0, 2], "direction": 1}, {"arc": ["beta", 0, 1], "direction": -1}], "corners": [["a^1", 0], ["e^2", 1], ["c^2", 0], ["b^1", 1]]},
    {"id": "r_a2b2c1e1", "boundary": [{"arc": ["alpha", 1, 0], "direction": 1}, {"arc": ["beta", 1, 3], "direction": -1}, {"arc": ["alpha", 1, 2], "direction": 1}, {"arc": ["beta", 0, 3], "direction": -1}], "corners": [["c^1", 0], ["b^2", 1], ["a^2", 0], ["e^1", 1]]},
    {"id": "r_a2b2c2e2", "boundary": [{"arc": ["alpha", 0, 1], "direction": -1}, {"arc": ["beta", 1, 2], "direction": 1}, {"arc": ["alpha", 1, 1], "direction": -1}, {"arc": ["beta", 1, 0], "direction": 1}], "corners": [["c^2", 2], ["e^2", 3], ["a^2", 2], ["b^2", 3]]},
    {"id": "r_w0", "boundary": [{"arc": ["alpha", 0, 0], "direction": -1}, {"arc": ["beta", 0, 0], "direction": -1}, {"arc": ["alpha", 1, 2], "direction": -1}, {"arc": ["beta", 1, 2], "direction": -1}], "corners": [["e^2", 2], ["a^1", 3], ["e^1", 2], ["a^2", 3]]},
    {"id": "r_w1^1", "boundary": [{"arc": ["alpha", 0, 3], "direction": 1}, {"arc": ["beta", 0, 1], "direction": 1}], "corners": [["b^1", 0], ["a^1", 1]]},
    {"id": "r_w1^2", "boundary": [{"arc": ["alpha", 1, 1], "direction": 1}, {"arc": ["beta", 1, 3], "direction": 1}], "corners": [["b^2", 0], ["a^2", 1]]},
    {"id": "r_z0", "boundary": [{"arc": ["alpha", 0, 2], "direction": -1}, {"arc": ["beta", 1, 0], "direction": -1}, {"arc": ["alpha", 1, 0], "direction": -1}, {"arc": ["beta", 0, 2], "direction": -1}], "corners": [["b^1", 2], ["c^2", 3], ["b^2", 2], ["c^1", 3]]},
    {"id": "r_z1^1", "boundary": [{"arc": ["alpha", 1, 3], "direction": 1}, {"arc": ["beta", 0, 3], "direction": 1}], "corners": [["e^1", 0], ["c^1", 1]]},
    {"id": "r_z1^2", "boundary": [{"arc": ["alpha", 0, 1], "direction": 1}, {"arc": ["beta", 1, 1], "direction": 1}], "corners": [["e^2", 0], ["c^2", 1]]}
  ],
  "basepoints": [
    {"id": "w0", "kind": "w", "region": "r_w0"},
    {"id": "z0", "kind": "z", "region": "r_z0"},
    {"id": "w1^1", "kind": "w", "region": "r_w1^1"},
    {"id": "w1^2", "kind": "w", "region": "r_w1^2"},
    {"id": "z1^1", "kind": "z", "region": "r_z1^1"},
    {"id": "z1^2", "kind": "z", "region": "r_z1^2"}
  ],
  "link_components": [
    {"name": "K", "pairs": [["z1^1", "w1^1"], ["z1^2", "w1^2"]]},
    {"name": "U", "pairs": [["z0", "w0"]]}
  ],
  "involution": {"intersections": {"a^1": "a^2", "a^2": "a^1", "b^1": "b^2", "b^2": "b^1", "c^1": "c^2", "c^2": "c^1", "e^1": "e^2", "e^2": "e^1"}, "regions": {"r_a1b1c1e1": "r_a2b2c2e2", "r_a1b1c2e2": "r_a2b2c1e1", "r_a2b2c1e1": "r_a1b1c2e2", "r_a2b2c2e2": "r_a1b1c1e1", "r_w0": "r_w0", "r_w1^1": "r_w1^2", "r_w1^2": "r_w1^1", "r_z0": "r_z0", "r_z1^1": "r_z1^2", "r_z1^2": "r_z1^1"}, "fixed": ["z0", "w0"]}
}
)json";

inline constexpr const char* trefoil_quotient = R"json({
  "name": "trefoil-quotient",
  "alpha_orders": [["a", "m", "c", "k", "f", "i", "h", "g", "j", "e", "l", "b"]],
  "beta_orders": [["g", "f", "e", "c", "b", "a", "m", "l", "k", "j", "i", "h"]],
  "intersections": [
    {"id": "a", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "b", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "c", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "e", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "f", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "g", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "h", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "i", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "j", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "k", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "l", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "m", "alpha": 0, "beta": 0, "sign": -1}
  ],
  "regions": [
    {"id": "r_abcm", "boundary": [{"arc": ["alpha", 0, 1], "direction": 1}, {"arc": ["beta", 0, 3], "direction": 1}, {"arc": ["alpha", 0, 11], "direction": 1}, {"arc": ["beta", 0, 5], "direction": 1}], "corners": [["m", 0], ["c", 1], ["b", 0], ["a", 1]]},
    {"id": "r_ablm", "boundary": [{"arc": ["alpha", 0, 0], "direction": -1}, {"arc": ["beta", 0, 4], "direction": -1}, {"arc": ["alpha", 0, 10], "direction": -1}, {"arc": ["beta", 0, 6], "direction": -1}], "corners": [["m", 2], ["a", 3], ["b", 2], ["l", 3]]},
    {"id": "r_bckl", "boundary": [{"arc": ["alpha", 0, 2], "direction": 1}, {"arc": ["beta", 0, 7], "direction": -1}, {"arc": ["alpha", 0, 10], "direction": 1}, {"arc": ["beta", 0, 3], "direction": -1}], "corners": [["c", 0], ["k", 1], ["l", 0], ["b", 1]]},
    {"id": "r_cejk", "boundary": [{"arc": ["alpha", 0, 2], "direction": -1}, {"arc": ["beta", 0, 2], "direction": -1}, {"arc": ["alpha", 0, 8], "direction": -1}, {"arc": ["beta", 0, 8], "direction": -1}], "corners": [["k", 2], ["c", 3], ["e", 2], ["j", 3]]},
    {"id": "r_celm", "boundary": [{"arc": ["alpha", 0, 1], "direction": -1}, {"arc": ["beta", 0, 6], "direction": 1}, {"arc": ["alpha", 0, 9], "direction": -1}, {"arc": ["beta", 0, 2], "direction": 1}], "corners": [["c", 2], ["m", 3], ["l", 2], ["e", 3]]},
    {"id": "r_efij", "boundary": [{"arc": ["alpha", 0, 4], "direction": 1}, {"arc": ["beta", 0, 9], "direction": -1}, {"arc": ["alpha", 0, 8], "direction": 1}, {"arc": ["beta", 0, 1], "direction": -1}], "corners": [["f", 0], ["i", 1], ["j", 0], ["e", 1]]},
    {"id": "r_efkl", "boundary": [{"arc": ["alpha", 0, 3], "direction": 1}, {"arc": ["beta", 0, 1], "direction": 1}, {"arc": ["alpha", 0, 9], "direction": 1}, {"arc": ["beta", 0, 7], "direction": 1}], "corners": [["k", 0], ["f", 1], ["e", 0], ["l", 1]]},
    {"id": "r_fghi", "boundary": [{"arc": ["alpha", 0, 4], "direction": -1}, {"arc": ["beta", 0, 0], "direction": -1}, {"arc": ["alpha", 0, 6], "direction": -1}, {"arc": ["beta", 0, 10], "direction": -1}], "corners": [["i", 2], ["f", 3], ["g", 2], ["h", 3]]},
    {"id": "r_fgjk", "boundary": [{"arc": ["alpha", 0, 3], "direction": -1}, {"arc": ["beta", 0, 8], "direction": 1}, {"arc": ["alpha", 0, 7], "direction": -1}, {"arc": ["beta", 0, 0], "direction": 1}], "corners": [["f", 2], ["k", 3], ["j", 2], ["g", 3]]},
    {"id": "r_ghij", "boundary": [{"arc": ["alpha", 0, 5], "direction": 1}, {"arc": ["beta", 0, 11], "direction": 1}, {"arc": ["alpha", 0, 7], "direction": 1}, {"arc": ["beta", 0, 9], "direction": 1}], "corners": [["i", 0], ["h", 1], ["g", 0], ["j", 1]]},
    {"id": "r_w0", "boundary": [{"arc": ["alpha", 0, 0], "direction": 1}, {"arc": ["beta", 0, 5], "direction": -1}], "corners": [["a", 0], ["m", 1]]},
    {"id": "r_w1", "boundary": [{"arc": ["alpha", 0, 5], "direction": -1}, {"arc": ["beta", 0, 10], "direction": 1}], "corners": [["h", 2], ["i", 3]]},
    {"id": "r_z0", "boundary": [{"arc": ["alpha", 0, 6], "direction": 1}, {"arc": ["beta", 0, 11], "direction": -1}], "corners": [["h", 0], ["g", 1]]},
    {"id": "r_z1", "boundary": [{"arc": ["alpha", 0, 11], "direction": -1}, {"arc": ["beta", 0, 4], "direction": 1}], "corners": [["a", 2], ["b", 3]]}
  ],
  "basepoints": [
    {"id": "w0", "kind": "w", "region": "r_w0"},
    {"id": "z0", "kind": "z", "region": "r_z0"},
    {"id": "w1", "kind": "w", "region": "r_w1"},
    {"id": "z1", "kind": "z", "region": "r_z1"}
  ],
  "link_components": [
    {"name": "K", "pairs": [["z1", "w1"]]},
    {"name": "U", "pairs": [["z0", "w0"]]}
  ]
}
)json";

inline constexpr const char* trefoil_cover = R"json({
  "name": "trefoil-cover",
  "alpha_orders": [["a^1", "m^2", "c^2", "k^1", "f^1", "i^2", "h^2", "g^1", "j^1", "e^2", "l^2", "b^1"], ["a^2", "m^1", "c^1", "k^2", "f^2", "i^1", "h^1", "g^2", "j^2", "e^1", "l^1", "b^2"]],
  "beta_orders": [["g^1", "f^1", "e^1", "c^1", "b^1", "a^1", "m^1", "l^1", "k^1", "j^1", "i^1", "h^1"], ["m^2", "l^2", "k^2", "j^2", "i^2", "h^2", "g^2", "f^2", "e^2", "c^2", "b^2", "a^2"]],
  "intersections": [
    {"id": "a^1", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "a^2", "alpha": 1, "beta": 1, "sign": 1},
    {"id": "b^1", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "b^2", "alpha": 1, "beta": 1, "sign": -1},
    {"id": "c^1", "alpha": 1, "beta": 0, "sign": 1},
    {"id": "c^2", "alpha": 0, "beta": 1, "sign": 1},
    {"id": "e^1", "alpha": 1, "beta": 0, "sign": -1},
    {"id": "e^2", "alpha": 0, "beta": 1, "sign": -1},
    {"id": "f^1", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "f^2", "alpha": 1, "beta": 1, "sign": 1},
    {"id": "g^1", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "g^2", "alpha": 1, "beta": 1, "sign": -1},
    {"id": "h^1", "alpha": 1, "beta": 0, "sign": 1},
    {"id": "h^2", "alpha": 0, "beta": 1, "sign": 1},
    {"id": "i^1", "alpha": 1, "beta": 0, "sign": -1},
    {"id": "i^2", "alpha": 0, "beta": 1, "sign": -1},
    {"id": "j^1", "alpha": 0, "beta": 0, "sign": 1},
    {"id": "j^2", "alpha": 1, "beta": 1, "sign": 1},
    {"id": "k^1", "alpha": 0, "beta": 0, "sign": -1},
    {"id": "k^2", "alpha": 1, "beta": 1, "sign": -1},
    {"id": "l^1", "alpha": 1, "beta": 0, "sign": 1},
    {"id": "l^2", "alpha": 0, "beta": 1, "sign": 1},
    {"id": "m^1", "alpha": 1, "beta": 0, "sign": -1},
    {"id": "m^2", "alpha": 0, "beta": 1, "sign": -1}
  ],
  "regions": [
    {"id": "r_a1b1c1m1", "boundary": [{"arc": ["alpha", 0, 11], "direction": 1}, {"arc": ["beta", 0, 5], "direction": 1}, {"arc": ["alpha", 1, 1], "direction": 1}, {"arc": ["beta", 0, 3], "direction": 1}], "corners": [["b^1", 0], ["a^1", 1], ["m^1", 0], ["c^1", 1]]},
    {"id": "r_a1b1l2m2", "boundary": [{"arc": ["alpha", 0, 0], "direction": -1}, {"arc": ["beta", 0, 4], "direction": -1}, {"arc": ["alpha", 0, 10], "direction": -1}, {"arc": ["beta", 1, 0], "direction": -1}], "corners": [["m^2", 2], ["a^1", 3], ["b^1", 2], ["l^2", 3]]},
    {"id": "r_a2b2c2m2", "boundary": [{"arc": ["alpha", 0, 1], "direction": 1}, {"arc": ["beta", 1, 9], "direction": 1}, {"arc": ["alpha", 1, 11], "direction": 1}, {"arc": ["beta", 1, 11], "direction": 1}], "corners": [["m^2", 0], ["c^2", 1], ["b^2", 0], ["a^2", 1]]},
    {"id": "r_a2b2l1m1", "boundary": [{"arc": ["alpha", 1, 0], "direction": -1}, {"arc": ["beta", 1, 10], "direction": -1}, {"arc": ["alpha", 1, 10], "direction": -1}, {"arc": ["beta", 0, 6], "direction": -1}], "corners": [["m^1", 2], ["a^2", 3], ["b^2", 2], ["l^1", 3]]},
    {"id": "r_b1c1k2l2", "boundary": [{"arc": ["alpha", 0, 10], "direction": 1}, {"arc": ["beta", 0, 3], "direction": -1}, {"arc": ["alpha", 1, 2], "direction": 1}, {"arc": ["beta", 1, 1], "direction": -1}], "corners": [["l^2", 0], ["b^1", 1], ["c^1", 0], ["k^2", 1]]},
    {"id": "r_b2c2k1l1", "boundary": [{"arc": ["alpha", 0, 2], "direction": 1}, {"arc": ["beta", 0, 7], "direction": -1}, {"arc": ["alpha", 1, 10], "direction": 1}, {"arc": ["beta", 1, 9], "direction": -1}], "corners": [["c^2", 0], ["k^1", 1], ["l^1", 0], ["b^2", 1]]},
    {"id": "r_c1e1j2k2", "boundary": [{"arc": ["alpha", 1, 2], "direction": -1}, {"arc": ["beta", 0, 2], "direction": -1}, {"arc": ["alpha", 1, 8], "direction": -1}, {"arc": ["beta", 1, 2], "direction": -1}], "corners": [["k^2", 2], ["c^1", 3], ["e^1", 2], ["j^2", 3]]},
    {"id": "r_c1e1l1m1", "boundary": [{"arc": ["alpha", 1, 1], "direction": -1}, {"arc": ["beta", 0, 6], "direction": 1}, {"arc": ["alpha", 1, 9], "direction": -1}, {"arc": ["beta", 0, 2], "direction": 1}], "corners": [["c^1", 2], ["m^1", 3], ["l^1", 2], ["e^1", 3]]},
    {"id": "r_c2e2j1k1", "boundary": [{"arc": ["alpha", 0, 2], "direction": -1}, {"arc": ["beta", 1, 8], "direction": -1}, {"arc": ["alpha", 0, 8], "direction": -1}, {"arc": ["beta", 0, 8], "direction": -1}], "corners": [["k^1", 2], ["c^2", 3], ["e^2", 2], ["j^1", 3]]},
    {"id": "r_c2e2l2m2", "boundary": [{"arc": ["alpha", 0, 1], "direction": -1}, {"arc": ["beta", 1, 0], "direction": 1}, {"arc": ["alpha", 0, 9], "direction": -1}, {"arc": ["beta", 1, 8], "direction": 1}], "corners": [["c^2", 2], ["m^2", 3], ["l^2", 2], ["e^2", 3]]},
    {"id": "r_e1f1i2j2", "boundary": [{"arc": ["alpha", 0, 4], "direction": 1}, {"arc": ["beta", 1, 3], "direction": -1}, {"arc": ["alpha", 1, 8], "direction": 1}, {"arc": ["beta", 0, 1], "direction": -1}], "corners": [["f^1", 0], ["i^2", 1], ["j^2", 0], ["e^1", 1]]},
    {"id": "r_e1f1k1l1", "boundary": [{"arc": ["alpha", 0, 3], "direction": 1}, {"arc": ["beta", 0, 1], "direction": 1}, {"arc": ["alpha", 1, 9], "direction": 1}, {"arc": ["beta", 0, 7], "direction": 1}], "corners": [["k^1", 0], ["f^1", 1], ["e^1", 0], ["l^1", 1]]},
    {"id": "r_e2f2i1j1", "boundary": [{"arc": ["alpha", 0, 8], "direction": 1}, {"arc": ["beta", 1, 7], "direction": -1}, {"arc": ["alpha", 1, 4], "direction": 1}, {"arc": ["beta", 0, 9], "direction": -1}], "corners": [["j^1", 0], ["e^2", 1], ["f^2", 0], ["i^1", 1]]},
    {"id": "r_e2f2k2l2", "boundary": [{"arc": ["alpha", 0, 9], "direction": 1}, {"arc": ["beta", 1, 1], "direction": 1}, {"arc": ["alpha", 1, 3], "direction": 1}, {"arc": ["beta", 1, 7], "direction": 1}], "corners": [["e^2", 0], ["l^2", 1], ["k^2", 0], ["f^2", 1]]},
    {"id": "r_f1g1h2i2", "boundary": [{"arc": ["alpha", 0, 4], "direction": -1}, {"arc": ["beta", 0, 0], "direction": -1}, {"arc": ["alpha", 0, 6], "direction": -1}, {"arc": ["beta", 1, 4], "direction": -1}], "corners": [["i^2", 2], ["f^1", 3], ["g^1", 2], ["h^2", 3]]},
    {"id": "r_f1g1j1k1", "boundary": [{"arc": ["alpha", 0, 3], "direction": -1}, {"arc": ["beta", 0, 8], "direction": 1}, {"arc": ["alpha", 0, 7], "direction": -1}, {"arc": ["beta", 0, 0], "direction": 1}], "corners": [["f^1", 2], ["k^1", 3], ["j^1", 2], ["g^1", 3]]},
    {"id": "r_f2g2h1i1", "boundary": [{"arc": ["alpha", 1, 4], "direction": -1}, {"arc": ["beta", 1, 6], "direction": -1}, {"arc": ["alpha", 1, 6], "direction": -1}, {"arc": ["beta", 0, 10], "direction": -1}], "corners": [["i^1", 2], ["f^2", 3], ["g^2", 2], ["h^1", 3]]},
    {"id": "r_f2g2j2k2", "boundary": [{"arc": ["alpha", 1, 3], "direction": -1}, {"arc": ["beta", 1, 2], "direction": 1}, {"arc": ["alpha", 1, 7], "direction": -1}, {"arc": ["beta", 1, 6], "direction": 1}], "corners": [["f^2", 2], ["k^2", 3], ["j^2", 2], ["g^2", 3]]},
    {"id": "r_g1h1i1j1", "boundary": [{"arc": ["alpha", 0, 7], "direction": 1}, {"arc": ["beta", 0, 9], "direction": 1}, {"arc": ["alpha", 1, 5], "direction": 1}, {"arc": ["beta", 0, 11], "direction": 1}], "corners": [["g^1", 0], ["j^1", 1], ["i^1", 0], ["h^1", 1]]},
    {"id": "r_g2h2i2j2", "boundary": [{"arc": ["alpha", 0, 5], "direction": 1}, {"arc": ["beta", 1, 5], "direction": 1}, {"arc": ["alpha", 1, 7], "direction": 1}, {"arc": ["beta", 1, 3], "direction": 1}], "corners": [["i^2", 0], ["h^2", 1], ["g^2", 0], ["j^2", 1]]},
    {"id": "r_w0", "boundary": [{"arc": ["alpha", 0, 0], "direction": 1}, {"arc": ["beta", 1, 11], "direction": -1}, {"arc": ["alpha", 1, 0], "direction": 1}, {"arc": ["beta", 0, 5], "direction": -1}], "corners": [["a^1", 0], ["m^2", 1], ["a^2", 0], ["m^1", 1]]},
    {"id": "r_w1^1", "boundary": [{"arc": ["alpha", 1, 5], "direction": -1}, {"arc": ["beta", 0, 10], "direction": 1}], "corners": [["h^1", 2], ["i^1", 3]]},
    {"id": "r_w1^2", "boundary": [{"arc": ["alpha", 0, 5], "direction": -1}, {"arc": ["beta", 1, 4], "direction": 1}], "corners": [["h^2", 2], ["i^2", 3]]},
    {"id": "r_z0", "boundary": [{"arc": ["alpha", 0, 6], "direction": 1}, {"arc": ["beta", 0, 11], "direction": -1}, {"arc": ["alpha", 1, 6], "direction": 1}, {"arc": ["beta", 1, 5], "direction": -1}], "corners": [["h^2", 0], ["g^1", 1], ["h^1", 0], ["g^2", 1]]},
    {"id": "r_z1^1", "boundary": [{"arc": ["alpha", 0, 11], "direction": -1}, {"arc": ["beta", 0, 4], "direction": 1}], "corners": [["a^1", 2], ["b^1", 3]]},
    {"id": "r_z1^2", "boundary": [{"arc": ["alpha", 1, 11], "direction": -1}, {"arc": ["beta", 1, 10], "direction": 1}], "corners": [["a^2", 2], ["b^2", 3]]}
  ],
  "basepoints": [
    {"id": "w0", "kind": "w", "region": "r_w0"},
    {"id": "z0", "kind": "z", "region": "r_z0"},
    {"id": "z1^1", "kind": "z", "region": "r_z1^1"},
    {"id": "w1^1", "kind": "w", "region": "r_w1^1"},
    {"id": "w1^2", "kind": "w", "region": "r_w1^2"},
    {"id": "z1^2", "kind": "z", "region": "r_z1^2"}
  ],
  "link_components": [
    {"name": "K", "pairs": [["z1^1", "w1^1"], ["z1^2", "w1^2"]]},
    {"name": "U", "pairs": [["z0", "w0"]]}
  ],
  "involution": {"intersections": {"a^1": "a^2", "a^2": "a^1", "b^1": "b^2", "b^2": "b^1", "c^1": "c^2", "c^2": "c^1", "e^1": "e^2", "e^2": "e^1", "f^1": "f^2", "f^2": "f^1", "g^1": "g^2", "g^2": "g^1", "h^1": "h^2", "h^2": "h^1", "i^1": "i^2", "i^2": "i^1", "j^1": "j^2", "j^2": "j^1", "k^1": "k^2", "k^2": "k^1", "l^1": "l^2", "l^2": "l^1", "m^1": "m^2", "m^2": "m^1"}, "regions": {"r_a1b1c1m1": "r_a2b2c2m2", "r_a1b1l2m2": "r_a2b2l1m1", "r_a2b2c2m2": "r_a1b1c1m1", "r_a2b2l1m1": "r_a1b1l2m2", "r_b1c1k2l2": "r_b2c2k1l1", "r_b2c2k1l1": "r_b1c1k2l2", "r_c1e1j2k2": "r_c2e2j1k1", "r_c1e1l1m1": "r_c2e2l2m2", "r_c2e2j1k1": "r_c1e1j2k2", "r_c2e2l2m2": "r_c1e1l1m1", "r_e1f1i2j2": "r_e2f2i1j1", "r_e1f1k1l1": "r_e2f2k2l2", "r_e2f2i1j1": "r_e1f1i2j2", "r_e2f2k2l2": "r_e1f1k1l1", "r_f1g1h2i2": "r_f2g2h1i1", "r_f1g1j1k1": "r_f2g2j2k2", "r_f2g2h1i1": "r_f1g1h2i2", "r_f2g2j2k2": "r_f1g1j1k1", "r_g1h1i1j1": "r_g2h2i2j2", "r_g2h2i2j2": "r_g1h1i1j1", "r_w0": "r_w0", "r_w1^1": "r_w1^2", "r_w1^2": "r_w1^1", "r_z0": "r_z0", "r_z1^1": "r_z1^2", "r_z1^2": "r_z1^1"}, "fixed": ["z0", "w0"]}
}
)json";

inline constexpr const char* expected_unknot = R"json({
  "family": "unknot",
  "generators": {"quotient": 4, "cover": 8},
  "lambda": 1,
  "link": {"quotient_rank": 4, "page_totals": [8, 4], "e_infinity": 4},
  "knot": {"quotient_rank": 2, "page_totals": [4, 4, 2], "e_infinity": 2},
  "murasugi": true,
  "genus": {"cover": 0, "quotient": 0},
  "edmonds": {"holds": true, "sharp": true},
  "fibred": {"cover": true, "quotient": true}
}
)json";

inline constexpr const char* expected_trefoil = R"json({
  "family": "trefoil",
  "generators": {"quotient": 12, "cover": 72},
  "lambda": 3,
  "link": {"quotient_rank": 12, "page_totals": [24, 12], "e_infinity": 12},
  "knot": {"quotient_rank": 2, "page_totals": [12, 4, 2], "e_infinity": 2},
  "murasugi": true,
  "genus": {"cover": 1, "quotient": 0},
  "edmonds": {"holds": true, "sharp": true},
  "fibred": {"cover": true, "quotient": true}
}
)json";

}  // namespace hfk::builtin_text
