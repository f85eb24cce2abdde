/* qromopt: database reordering for compact QROM circuits
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file cost.hpp
  \brief Literal-count proxy score, T-count estimate, and rank correlation

  The proxy score of an ordering is the total number of specified
  literals across all minimized covers; each cube becomes one MCX gate
  whose control count equals its literal count.  T gates are estimated
  as 8k - 12 per gate with k >= 2 controls; X and CX are Clifford and
  contribute none.
*/

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "esop.hpp"

namespace qromopt
{

inline uint32_t literal_count( cube c )
{
  return static_cast<uint32_t>( std::popcount( c.care ) );
}

/*! \brief Total specified literals across all covers. */
inline int64_t proxy_score( std::vector<cover> const& covers )
{
  int64_t total = 0;
  for ( auto const& cov : covers )
  {
    for ( auto const& c : cov.cubes )
      total += literal_count( c );
  }
  return total;
}

/*! \brief T gates of one MCX with k controls: 0 for k <= 1, else 8k - 12. */
inline int64_t mcx_t_count( uint32_t num_controls )
{
  return num_controls <= 1 ? 0 : 8 * int64_t( num_controls ) - 12;
}

/*! \brief Cost breakdown of a set of covers. */
struct cost_report
{
  uint32_t num_address_bits{ 0 };
  uint32_t num_data_bits{ 0 };
  int64_t proxy{ 0 };
  int64_t cube_count{ 0 };
  std::map<uint32_t, int64_t> gate_histogram; /* control count -> gate count */
  int64_t t_count{ 0 };
};

inline cost_report make_cost_report( std::vector<cover> const& covers, uint32_t num_address_bits )
{
  cost_report report;
  report.num_address_bits = num_address_bits;
  report.num_data_bits = static_cast<uint32_t>( covers.size() );
  for ( auto const& cov : covers )
  {
    for ( auto const& c : cov.cubes )
    {
      uint32_t const k = literal_count( c );
      ++report.gate_histogram[k];
      report.proxy += k;
      ++report.cube_count;
      report.t_count += mcx_t_count( k );
    }
  }
  return report;
}

inline void to_json( nlohmann::json& j, cost_report const& report )
{
  nlohmann::json histogram = nlohmann::json::object();
  for ( auto const& [k, count] : report.gate_histogram )
    histogram[std::to_string( k )] = count;
  j = nlohmann::json{ { "n", report.num_address_bits },
                      { "d", report.num_data_bits },
                      { "proxy", report.proxy },
                      { "cube_count", report.cube_count },
                      { "gate_histogram", histogram },
                      { "t_count", report.t_count } };
}

namespace detail
{

/* Average ranks (1-based); tied values share the mean of their positions. */
inline std::vector<double> average_ranks( std::span<double const> values )
{
  std::size_t const n = values.size();
  std::vector<std::size_t> order( n );
  std::iota( order.begin(), order.end(), std::size_t( 0 ) );
  std::sort( order.begin(), order.end(), [&]( std::size_t a, std::size_t b ) {
    return values[a] < values[b];
  } );
  std::vector<double> ranks( n );
  std::size_t i = 0;
  while ( i < n )
  {
    std::size_t j = i;
    while ( j < n && values[order[j]] == values[order[i]] )
      ++j;
    double const rank = 0.5 * double( i + j + 1 ); /* mean of positions i+1 .. j */
    for ( std::size_t k = i; k < j; ++k )
      ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

} /* namespace detail */

/*! \brief Spearman rank correlation with average ranks for ties.
 *
 * Returns NaN when either side has constant ranks (correlation is
 * undefined in that case).
 */
inline double spearman_rho( std::span<double const> xs, std::span<double const> ys )
{
  if ( xs.size() != ys.size() )
    throw std::invalid_argument( "spearman_rho requires sequences of equal length" );
  if ( xs.size() < 2 )
    throw std::invalid_argument( "spearman_rho requires at least 2 observations" );

  auto const rx = detail::average_ranks( xs );
  auto const ry = detail::average_ranks( ys );
  std::size_t const n = rx.size();

  double mx = 0.0, my = 0.0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    mx += rx[i];
    my += ry[i];
  }
  mx /= double( n );
  my /= double( n );

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    double const dx = rx[i] - mx;
    double const dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if ( sxx == 0.0 || syy == 0.0 )
    return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt( sxx * syy );
}

} /* namespace qromopt */
