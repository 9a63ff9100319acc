#pragma once

#include "ctf/graph.hpp"

namespace fixtures {

inline ctf::MultiGraph k1() { return ctf::MultiGraph(1, {}); }
inline ctf::MultiGraph k2() { return ctf::MultiGraph(2, {{0, 1}}); }
inline ctf::MultiGraph l1() { return ctf::MultiGraph(1, {{0, 0}}); }
inline ctf::MultiGraph digon() { return ctf::MultiGraph(2, {{0, 1}, {0, 1}}); }
inline ctf::MultiGraph digon_loop() { return ctf::MultiGraph(2, {{0, 1}, {1, 0}, {0, 0}}); }
inline ctf::MultiGraph path3() { return ctf::MultiGraph(3, {{0, 1}, {1, 2}}); }
inline ctf::MultiGraph c3() { return ctf::MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline ctf::MultiGraph c4() { return ctf::MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline ctf::MultiGraph k4() { return ctf::MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
/// Triangle u-v-w with doubled uv and vw.
inline ctf::MultiGraph p8() { return ctf::MultiGraph(3, {{0, 2}, {0, 1}, {1, 2}, {0, 1}, {1, 2}}); }
/// Two components: a digon and a triangle with a pendant loop.
inline ctf::MultiGraph split() { return ctf::MultiGraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 4}}); }

} // namespace fixtures
