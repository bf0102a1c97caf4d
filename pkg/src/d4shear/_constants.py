# Generated by d4shear.surface.write_constants; do not edit.
# EG bracket -> (Goldman generator, Goldman generator, sign)
EG_DICTIONARY = {
    'u,v': ['12', '13', 1],
    'v,w': ['13', '23', 1],
    'w,u': ['23', '12', 1],
}
