#include "repseq/dp_tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace repseq {

namespace {

void require_dims(const LcsTable& lcs, std::initializer_list<std::string_view> strings, const char* who) {
  if (!lcs.dims_match(std::span<const std::string_view>(strings.begin(), strings.size())))
    throw std::logic_error(std::string(who) + ": LCS table dimensions do not match the factors");
}

// Appends the tuples' coordinate j, shifted to global 1-based positions.
void emit(std::vector<std::size_t>& out, const std::vector<LcsTable::Index>& tuples, std::size_t j,
          std::size_t offset) {
  for (const auto& t : tuples) out.push_back(t[j] + offset);
}

void emit(std::vector<std::size_t>& out, const std::vector<std::size_t>& local, std::size_t offset) {
  for (auto p : local) out.push_back(p + offset);
}

}  // namespace

void fill_d2(DpTable2& out, std::string_view y, std::string_view z, const LcsTable& lcs, D2Gate gate) {
  require_dims(lcs, {y, z}, "d2_table");
  const std::size_t ny = y.size(), nz = z.size();
  out.reset({ny + 1, nz + 1});
  for (std::size_t i = 1; i <= ny; ++i) {
    for (std::size_t j = 1; j <= nz; ++j) {
      const Cell anchor_gate = gate == D2Gate::Corrected ? lcs(i - 1, j) : lcs(i - 1, j - 1);
      Cell v = anchor_gate > 0 ? 2 * lcs(i - 1, j) + 1 : 0;
      if (const Cell up = out(i - 1, j); up > 0) v = std::max(v, up + 1);
      v = std::max(v, out(i, j - 1));
      out(i, j) = v;
    }
  }
}

void fill_d3(DpTable3& out, std::string_view x, std::string_view y, std::string_view z, const LcsTable& lcs) {
  require_dims(lcs, {x, y, z}, "d3_table");
  const std::size_t nx = x.size(), ny = y.size(), nz = z.size();
  out.reset({nx + 1, ny + 1, nz + 1});
  const std::size_t sx = out.stride(0), sy = out.stride(1);
  Cell* d = out.data();
  for (std::size_t i = 1; i <= nx; ++i) {
    for (std::size_t j = 1; j <= ny; ++j) {
      const Cell delta = x[i - 1] == y[j - 1] ? 2 : 0;
      Cell* row = d + i * sx + j * sy;
      const Cell* diag = row - sx - sy;
      const Cell* back_x = row - sx;
      const Cell* back_y = row - sy;
      for (std::size_t k = 0; k <= nz; ++k) {
        Cell v = 3 * lcs(i - 1, j - 1, k) + delta;
        v = std::max(v, diag[k] + delta);
        v = std::max(v, back_x[k]);
        v = std::max(v, back_y[k]);
        if (k > 0) v = std::max(v, row[k - 1]);
        row[k] = v;
      }
    }
  }
}

void fill_d4(DpTable4& out, std::string_view w, std::string_view x, std::string_view y, std::string_view z,
             const LcsTable& lcs) {
  require_dims(lcs, {w, x, y, z}, "d4_table");
  const std::size_t nw = w.size(), nx = x.size(), ny = y.size(), nz = z.size();
  out.reset({nw + 1, nx + 1, ny + 1, nz + 1});
  const std::size_t sw = out.stride(0), sx = out.stride(1), sy = out.stride(2);
  Cell* d = out.data();
  for (std::size_t h = 1; h <= nw; ++h) {
    for (std::size_t i = 1; i <= nx; ++i) {
      for (std::size_t j = 1; j <= ny; ++j) {
        const bool match = w[h - 1] == x[i - 1] && x[i - 1] == y[j - 1];
        const Cell delta = match ? 3 : 0;
        Cell* row = d + h * sw + i * sx + j * sy;
        const Cell* diag = row - sw - sx - sy;
        const Cell* back_w = row - sw;
        const Cell* back_x = row - sx;
        const Cell* back_y = row - sy;
        for (std::size_t k = 0; k <= nz; ++k) {
          Cell v = match ? 4 * lcs(h - 1, i - 1, j - 1, k) + delta : 0;
          v = std::max(v, diag[k] + delta);
          v = std::max(v, back_w[k]);
          v = std::max(v, back_x[k]);
          v = std::max(v, back_y[k]);
          if (k > 0) v = std::max(v, row[k - 1]);
          row[k] = v;
        }
      }
    }
  }
}

DpTable2 d2_table(std::string_view y, std::string_view z, const LcsTable& lcs, D2Gate gate) {
  DpTable2 t;
  fill_d2(t, y, z, lcs, gate);
  return t;
}

DpTable3 d3_table(std::string_view x, std::string_view y, std::string_view z, const LcsTable& lcs) {
  DpTable3 t;
  fill_d3(t, x, y, z, lcs);
  return t;
}

DpTable4 d4_table(std::string_view w, std::string_view x, std::string_view y, std::string_view z,
                  const LcsTable& lcs) {
  DpTable4 t;
  fill_d4(t, w, x, y, z, lcs);
  return t;
}

std::vector<std::size_t> traceback(const DpTable2& table, const LcsTable& lcs, const Factorization& f,
                                   D2Gate gate) {
  std::vector<std::size_t> out;
  std::size_t i = table.extents()[0] - 1, j = table.extents()[1] - 1;
  if (table(i, j) == 0) return out;
  std::vector<std::size_t> chain;  // tail of U beyond the anchor, descending
  std::vector<LcsTable::Index> prefix;
  for (;;) {
    const Cell v = table(i, j);
    const Cell anchor_gate = gate == D2Gate::Corrected ? lcs(i - 1, j) : lcs(i - 1, j - 1);
    if (anchor_gate > 0 && 2 * lcs(i - 1, j) + 1 == v) {
      prefix = lcs.trace({i - 1, j, 0, 0});
      chain.push_back(i);
      break;
    }
    if (const Cell up = table(i - 1, j); up > 0 && up + 1 == v) {
      chain.push_back(i);
      --i;
      continue;
    }
    --j;  // copy from z-1; the only remaining option for a non-zero cell
  }
  std::reverse(chain.begin(), chain.end());
  const auto oy = f.start(0), oz = f.start(1);
  emit(out, prefix, 0, oy);
  emit(out, chain, oy);
  emit(out, prefix, 1, oz);
  return out;
}

std::vector<std::size_t> traceback(const DpTable3& table, const LcsTable& lcs, const Factorization& f) {
  std::vector<std::size_t> out;
  const auto& ext = table.extents();
  std::size_t i = ext[0] - 1, j = ext[1] - 1, k = ext[2] - 1;
  if (table(i, j, k) == 0) return out;
  std::string_view x = lcs.string(0), y = lcs.string(1);
  std::vector<std::size_t> chain_x, chain_y;
  std::vector<LcsTable::Index> prefix;
  for (;;) {
    const Cell v = table(i, j, k);
    const bool match = x[i - 1] == y[j - 1];
    const Cell delta = match ? 2 : 0;
    if (3 * lcs(i - 1, j - 1, k) + delta == v) {
      prefix = lcs.trace({i - 1, j - 1, k, 0});
      if (match) {
        chain_x.push_back(i);
        chain_y.push_back(j);
      }
      break;
    }
    if (table(i - 1, j - 1, k) + delta == v) {
      if (match) {
        chain_x.push_back(i);
        chain_y.push_back(j);
      }
      --i;
      --j;
    } else if (table(i - 1, j, k) == v) {
      --i;
    } else if (table(i, j - 1, k) == v) {
      --j;
    } else {
      --k;
    }
  }
  std::reverse(chain_x.begin(), chain_x.end());
  std::reverse(chain_y.begin(), chain_y.end());
  emit(out, prefix, 0, f.start(0));
  emit(out, chain_x, f.start(0));
  emit(out, prefix, 1, f.start(1));
  emit(out, chain_y, f.start(1));
  emit(out, prefix, 2, f.start(2));
  return out;
}

std::vector<std::size_t> traceback(const DpTable4& table, const LcsTable& lcs, const Factorization& f) {
  std::vector<std::size_t> out;
  const auto& ext = table.extents();
  std::size_t h = ext[0] - 1, i = ext[1] - 1, j = ext[2] - 1, k = ext[3] - 1;
  if (table(h, i, j, k) == 0) return out;
  std::string_view w = lcs.string(0), x = lcs.string(1), y = lcs.string(2);
  std::array<std::vector<std::size_t>, 3> chain;
  std::vector<LcsTable::Index> prefix;
  for (;;) {
    const Cell v = table(h, i, j, k);
    const bool match = w[h - 1] == x[i - 1] && x[i - 1] == y[j - 1];
    const Cell delta = match ? 3 : 0;
    if (match && 4 * lcs(h - 1, i - 1, j - 1, k) + delta == v) {
      prefix = lcs.trace({h - 1, i - 1, j - 1, k});
      chain[0].push_back(h);
      chain[1].push_back(i);
      chain[2].push_back(j);
      break;
    }
    if (table(h - 1, i - 1, j - 1, k) + delta == v) {
      if (match) {
        chain[0].push_back(h);
        chain[1].push_back(i);
        chain[2].push_back(j);
      }
      --h;
      --i;
      --j;
    } else if (table(h - 1, i, j, k) == v) {
      --h;
    } else if (table(h, i - 1, j, k) == v) {
      --i;
    } else if (table(h, i, j - 1, k) == v) {
      --j;
    } else {
      --k;
    }
  }
  for (std::size_t c = 0; c < 3; ++c) {
    std::reverse(chain[c].begin(), chain[c].end());
    emit(out, prefix, c, f.start(c));
    emit(out, chain[c], f.start(c));
  }
  emit(out, prefix, 3, f.start(3));
  return out;
}

std::vector<std::size_t> lcs_copies(const LcsTable& lcs, const Factorization& f) {
  LcsTable::Index corner{};
  for (std::size_t j = 0; j < lcs.arity(); ++j) corner[j] = lcs.extent(j) - 1;
  const auto tuples = lcs.trace(corner);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < lcs.arity(); ++j) emit(out, tuples, j, f.start(j));
  return out;
}

}  // namespace repseq
