//! JSON schemas of the input documents, printed by `--schema <name>`.

pub const NAMES: [&str; 6] = ["group", "cocycle", "twisted-irreps", "extquot", "catalog", "parabolic-pair"];

const GROUP: &str = r##"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "group",
  "description": "A finite group by its multiplication table (element 0 is the identity, table[a][b] = ab) or by generating permutations of 0..n.",
  "oneOf": [
    {
      "type": "object",
      "required": ["table"],
      "properties": { "table": { "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 0 } } } }
    },
    {
      "type": "object",
      "required": ["permutations"],
      "properties": { "permutations": { "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 0 } } } }
    }
  ]
}"##;

const COCYCLE: &str = r##"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "cocycle",
  "description": "A normalized 2-cocycle with values in the m-th roots of unity: table[g][h] = k means kappa(g, h) = exp(2 pi i k / m).",
  "type": "object",
  "required": ["modulus", "table"],
  "properties": {
    "modulus": { "type": "integer", "minimum": 1 },
    "table": { "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 0 } } }
  }
}"##;

const TWISTED_IRREPS: &str = r##"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "twisted-irreps",
  "type": "object",
  "required": ["group", "cocycle"],
  "properties": {
    "group": { "description": "see --schema group" },
    "cocycle": { "description": "see --schema cocycle" }
  }
}"##;

const EXTQUOT: &str = r##"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "extquot",
  "description": "A group action with twisted quotient data. Give either explicit strict data or base-point cocycles (one per orbit at most) from which the data is synthesized. Stabilizers are listed in increasing element order; gluing maps hold group elements.",
  "type": "object",
  "required": ["group", "action"],
  "additionalProperties": false,
  "properties": {
    "group": { "description": "see --schema group" },
    "action": { "description": "action[g][x] is the image of point x under g", "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 0 } } },
    "data": {
      "type": "object",
      "required": ["modulus", "cocycles", "theta"],
      "properties": {
        "modulus": { "type": "integer", "minimum": 1 },
        "cocycles": { "description": "cocycles[x][i][j] over the stabilizer of x", "type": "array" },
        "theta": {
          "description": "theta[g][x] = { map, scale }: T_h goes to zeta^scale[i] T_map[i] for the i-th stabilizer element h",
          "type": "array",
          "items": { "type": "array", "items": { "type": "object", "required": ["map", "scale"] } }
        }
      }
    },
    "modulus": { "type": "integer", "minimum": 1 },
    "base_points": {
      "type": "array",
      "items": { "type": "object", "required": ["point", "cocycle"], "properties": { "point": { "type": "integer" }, "cocycle": { "description": "see --schema cocycle" } } }
    },
    "blocks": { "description": "optional partition of the points permuted by the group; selects the two-step construction", "type": "array", "items": { "type": "array", "items": { "type": "integer" } } }
  }
}"##;

const CATALOG: &str = r##"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "catalog",
  "type": "object",
  "required": ["entries"],
  "properties": {
    "entries": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["levi_id", "lattice_rank", "generators", "labels", "points"],
        "properties": {
          "levi_id": { "type": "string" },
          "lattice_rank": { "type": "integer", "minimum": 0 },
          "generators": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["matrix", "label_perm", "point_perm"],
              "properties": {
                "matrix": { "description": "integer matrix acting on column vectors of the lattice, determinant +-1", "type": "array" },
                "label_perm": { "type": "array", "items": { "type": "integer" } },
                "point_perm": { "type": "array", "items": { "type": "integer" } }
              }
            }
          },
          "labels": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["name", "isotropy"],
              "properties": {
                "name": { "type": "string" },
                "central_character": { "type": ["string", "null"] },
                "shift": { "type": ["string", "null"] },
                "isotropy": {
                  "type": "object",
                  "required": ["modulus", "points"],
                  "properties": { "modulus": { "type": "integer", "minimum": 1 }, "points": { "type": "array" } }
                },
                "normal_subgroup_generators": { "type": ["array", "null"], "items": { "type": "integer" } }
              }
            }
          },
          "points": { "type": "array", "items": { "type": "object", "required": ["label"], "properties": { "label": { "type": "integer" } } } },
          "cocycles": {
            "description": "tables indexed by the stabilizer of the base point, in the breadth-first element order of the generated group",
            "type": "array",
            "items": {
              "type": "object",
              "required": ["base_point", "modulus", "table"],
              "properties": { "base_point": { "type": "integer" }, "modulus": { "type": "integer", "minimum": 1 }, "table": { "type": "array" } }
            }
          }
        }
      }
    }
  }
}"##;

const PARABOLIC_PAIR: &str = r##"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "parabolic-pair",
  "description": "A disconnected parabolic: 1-based simple roots X and generating diagram permutations (1-based) of a subgroup of the stabilizer of X.",
  "type": "object",
  "required": ["X", "omega"],
  "properties": {
    "X": { "type": "array", "items": { "type": "integer", "minimum": 1 } },
    "omega": { "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 1 } } }
  }
}"##;

pub fn get(name: &str) -> Option<&'static str> {
    Some(match name {
        "group" => GROUP,
        "cocycle" => COCYCLE,
        "twisted-irreps" => TWISTED_IRREPS,
        "extquot" => EXTQUOT,
        "catalog" => CATALOG,
        "parabolic-pair" => PARABOLIC_PAIR,
        _ => return None,
    })
}
