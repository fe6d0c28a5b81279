#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

// Z(5) drawn with B(5) labels: node name, Z label, B label as printed.
struct Fig1Vertex {
  const char* name;
  const char* z;
  const char* b;
};

inline const std::vector<Fig1Vertex> fig1_vertices = {
    {"L0ll", "00000", "00000"},  {"L1l", "10000", "00001"},   {"L2c", "20000", "00011"},
    {"L3l", "30000", "00111"},   {"L3r", "21000", "00010"},   {"L4ll", "40000", "01111"},
    {"L4c", "31000", "00110"},   {"L5ll", "50000", "11110"},  {"L5l", "41000", "01110"},
    {"L5r", "32000", "00100"},   {"L6l", "51000", "11110"},   {"L6c", "42000", "01100"},
    {"L6rr", "32100", "00101"},  {"L7l", "43000", "01000"},   {"L7c", "52000", "11100"},
    {"L7r", "42100", "01101"},   {"L8l", "53000", "11000"},   {"L8c", "43100", "01001"},
    {"L8r", "52100", "11101"},   {"L9ll", "54000", "10000"},  {"L9c", "53100", "11001"},
    {"L9r", "43200", "01011"},   {"L10l", "54100", "10001"},  {"L10r", "53200", "11011"},
    {"L10rr", "43210", "01010"}, {"L11c", "54200", "10011"},  {"L11rr", "53210", "11010"},
    {"L12l", "54300", "10111"},  {"L12r", "54210", "10010"},  {"L13c", "54310", "10110"},
    {"L14r", "54320", "10100"},  {"L15rr", "54321", "10101"},
};

inline const std::vector<std::tuple<std::string, std::string, int>> fig1_edges = {
    {"L0ll", "L1l", 5},   {"L1l", "L2c", 4},    {"L2c", "L3l", 3},    {"L2c", "L3r", 5},
    {"L3l", "L4ll", 2},   {"L3l", "L4c", 5},    {"L3r", "L4c", 3},    {"L4ll", "L5ll", 1},
    {"L4ll", "L5l", 5},   {"L4c", "L5l", 2},    {"L4c", "L5r", 4},    {"L5ll", "L6l", 5},
    {"L5l", "L6l", 1},    {"L5l", "L6c", 4},    {"L5r", "L6c", 2},    {"L5r", "L6rr", 5},
    {"L6l", "L7c", 4},    {"L6c", "L7l", 3},    {"L6c", "L7c", 1},    {"L6c", "L7r", 5},
    {"L6rr", "L7r", 2},   {"L7l", "L8l", 1},    {"L7c", "L8l", 3},    {"L7c", "L8r", 5},
    {"L7l", "L8c", 5},    {"L7r", "L8c", 3},    {"L7r", "L8r", 1},    {"L8l", "L9ll", 2},
    {"L8l", "L9c", 5},    {"L8c", "L9c", 1},    {"L8c", "L9r", 4},    {"L8r", "L9c", 5},
    {"L9ll", "L10l", 5},  {"L9c", "L10l", 2},   {"L9c", "L10r", 4},   {"L9r", "L10r", 1},
    {"L9r", "L10rr", 5},  {"L10l", "L11c", 4},  {"L10r", "L11c", 2},  {"L10r", "L11rr", 5},
    {"L10rr", "L11rr", 1}, {"L11c", "L12l", 3}, {"L11c", "L12r", 5},  {"L11rr", "L12r", 2},
    {"L12l", "L13c", 5},  {"L12r", "L13c", 3},  {"L13c", "L14r", 4},  {"L14r", "L15rr", 5},
};

// Drawn edge colors that disagree with the coloring rule: (from, to, drawn, computed).
inline const std::vector<std::tuple<std::string, std::string, int, int>> fig1_edge_misprints = {
    {"L8r", "L9c", 5, 3},
};

// Ballot domino digraph for k = n = 3: name, partition, King tableau, weight.
struct Fig3Vertex {
  const char* name;
  std::vector<int> partition;
  std::vector<int> tableau;
  std::vector<int> weight;
};

inline const std::vector<Fig3Vertex> fig3_vertices = {
    {"L0l", {3, 2, 1}, {2, 4, 6}, {0, 0, -1}},  {"L1l", {2, 2, 1}, {2, 4, 5}, {0, -2, 1}},
    {"L2c", {1, 1, 1}, {2, 3, 4}, {-1, 0, 0}},  {"L3r", {1, 0, 0}, {1, 2, 4}, {1, -1, 0}},
    {"L6r", {0, 0, 0}, {1, 2, 3}, {-1, 1, 0}},  {"L7c", {1, 1, 0}, {1, 3, 4}, {1, 0, 0}},
    {"L8l", {3, 1, 0}, {1, 3, 6}, {0, 2, -1}},  {"L9l", {2, 1, 0}, {1, 3, 5}, {0, 0, 1}},
    {"L3l", {3, 1, 1}, {2, 3, 6}, {-2, 2, -1}}, {"L4l", {2, 1, 1}, {2, 3, 5}, {-2, 0, 1}},
    {"L5l", {3, 2, 0}, {1, 4, 6}, {2, 0, -1}},  {"L6l", {2, 2, 0}, {1, 4, 5}, {2, -2, 1}},
    {"L4c", {3, 0, 0}, {1, 2, 6}, {0, 1, -1}},  {"L5c", {2, 0, 0}, {1, 2, 5}, {0, -1, 1}},
};

inline const std::vector<std::tuple<std::string, std::string, int>> fig3_edges = {
    {"L0l", "L1l", 3}, {"L1l", "L2c", 2}, {"L2c", "L3l", 2}, {"L2c", "L3r", 1}, {"L3l", "L4l", 3},
    {"L3l", "L4c", 1}, {"L3r", "L4c", 2}, {"L4c", "L5c", 3}, {"L5l", "L6l", 3}, {"L5c", "L6l", 1},
    {"L5c", "L6r", 2}, {"L6l", "L7c", 2}, {"L6r", "L7c", 1}, {"L7c", "L8l", 2}, {"L8l", "L9l", 3},
    {"L4l", "L5c", 1}, {"L4c", "L5l", 1},
};

// C(3)
inline const std::vector<std::pair<std::string, std::vector<int>>> fig7_vertices = {
    {"L0c", {0, 0, 0}}, {"L1c", {1, 0, 0}},  {"L2l", {1, 1, 0}},  {"L2r", {2, 0, 0}},  {"L3ll", {1, 1, 1}},
    {"L3c", {2, 1, 0}}, {"L3rr", {3, 0, 0}}, {"L4l", {2, 1, 1}},  {"L4c", {2, 2, 0}},  {"L4r", {3, 1, 0}},
    {"L5l", {2, 2, 1}}, {"L5c", {3, 1, 1}},  {"L5r", {3, 2, 0}},  {"L6c", {3, 2, 1}},
};

inline const std::vector<std::tuple<std::string, std::string, int>> fig7_edges = {
    {"L0c", "L1c", 3},  {"L1c", "L2l", 4},  {"L1c", "L2r", 2},  {"L2l", "L3ll", 5}, {"L2l", "L3c", 2},
    {"L2r", "L3c", 4},  {"L2r", "L3rr", 1}, {"L3ll", "L4l", 2}, {"L3c", "L4l", 5},  {"L3c", "L4c", 3},
    {"L3c", "L4r", 1},  {"L3rr", "L4r", 4}, {"L4l", "L5l", 3},  {"L4r", "L5r", 3},  {"L5l", "L6c", 1},
    {"L5c", "L6c", 3},  {"L5r", "L6c", 5},  {"L4c", "L5l", 5},  {"L4c", "L5r", 1},  {"L4l", "L5c", 1},
    {"L4r", "L5c", 5},
};

}  // namespace fixtures
