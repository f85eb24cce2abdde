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
  \file search.hpp
  \brief Permutation-space optimizers over the literal-count proxy

  Simulated annealing swaps the data at two random addresses per step
  and accepts worse candidates with probability exp(-dS/T) under a
  geometric temperature schedule; Random-K draws independent uniform
  orderings; exhaustive enumeration covers all N! orderings for small N.
  All methods record a best-so-far trace and are deterministic given the
  seed.
*/

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cost.hpp"
#include "database.hpp"
#include "esop.hpp"

namespace qromopt
{

enum class search_method
{
  anneal,
  random,
  exhaustive
};

inline std::string to_string( search_method m )
{
  switch ( m )
  {
  case search_method::anneal:
    return "anneal";
  case search_method::random:
    return "random";
  default:
    return "exhaustive";
  }
}

struct search_config
{
  int64_t budget{ 1000 };
  double t_max{ 25000.0 };
  double t_min{ 2.5 };
  uint64_t seed{ 0 };
  search_method method{ search_method::anneal };
  int64_t stall_window{ 0 }; /* stop after this many steps without improvement; 0 disables */
};

inline void validate( search_config const& cfg )
{
  if ( cfg.budget < 0 )
    throw std::invalid_argument( "budget must be >= 0" );
  if ( !( cfg.t_max > cfg.t_min ) || !( cfg.t_min > 0.0 ) )
    throw std::invalid_argument( "temperatures must satisfy t_max > t_min > 0" );
}

struct trace_point
{
  int64_t step{ 0 };
  int64_t best_score{ 0 };

  bool operator==( trace_point const& other ) const = default;
};

struct search_result
{
  permutation best_perm;
  int64_t best_score{ 0 };
  std::vector<trace_point> trace; /* best-so-far, non-increasing */
  int64_t evaluations{ 0 };
};

struct score_stats
{
  int64_t min_score{ 0 };
  int64_t max_score{ 0 };
  double avg_score{ 0.0 };
};

/*! \brief Proxy score of one candidate ordering: minimize every output bit of the reordered database. */
inline int64_t evaluate( database const& db, permutation const& perm )
{
  if ( perm.size() != db.num_entries() )
    throw std::invalid_argument( "permutation size does not match database size" );
  return proxy_score( minimize_database( reorder( db, perm ) ) );
}

namespace detail
{

/* Unbiased draw from [0, bound) by masked rejection; reproducible across platforms. */
inline uint64_t bounded( std::mt19937_64& rng, uint64_t bound )
{
  assert( bound >= 1 );
  if ( bound == 1 )
    return 0;
  uint64_t const mask = ~uint64_t( 0 ) >> std::countl_zero( bound - 1 );
  uint64_t v;
  do
  {
    v = rng() & mask;
  } while ( v >= bound );
  return v;
}

/* Uniform double in [0, 1) with 53 random bits. */
inline double canonical( std::mt19937_64& rng )
{
  return double( rng() >> 11 ) * 0x1.0p-53;
}

inline bool lexicographically_less( permutation const& a, permutation const& b )
{
  return a.mapping < b.mapping;
}

/* Best-ever tracking: lowest score, ties broken by lexicographically smallest permutation. */
inline bool update_best( search_result& result, permutation const& candidate, int64_t score )
{
  if ( score < result.best_score ||
       ( score == result.best_score && lexicographically_less( candidate, result.best_perm ) ) )
  {
    bool const improved = score < result.best_score;
    result.best_perm = candidate;
    result.best_score = score;
    return improved;
  }
  return false;
}

} /* namespace detail */

/*! \brief Unbiased Fisher-Yates draw from the seeded generator. */
inline permutation uniform_permutation( uint64_t num_addresses, std::mt19937_64& rng )
{
  if ( num_addresses < 1 )
    throw std::invalid_argument( "permutation needs at least one address" );
  permutation p = identity_permutation( num_addresses );
  for ( uint64_t i = num_addresses - 1; i > 0; --i )
  {
    uint64_t const j = detail::bounded( rng, i + 1 );
    std::swap( p.mapping[i], p.mapping[j] );
  }
  return p;
}

/*! \brief Per-step hook for instrumenting the annealing chain (testing aid). */
using anneal_observer = std::function<void( int64_t step, int64_t candidate_score, bool accepted )>;

/*! \brief Simulated annealing from the identity ordering.
 *
 * Step k of K uses temperature t_max * (t_min/t_max)^(k/K); the
 * neighbor swaps the data at two distinct uniform addresses; moves with
 * dS <= 0 are always accepted, others with probability exp(-dS/T).
 * Returns the best ordering ever evaluated, not the final chain state.
 */
inline search_result anneal( database const& db, search_config const& cfg,
                             anneal_observer const& observer = {} )
{
  validate( cfg );
  if ( cfg.method != search_method::anneal )
    throw std::invalid_argument( "config method must be anneal" );

  uint64_t const num_addresses = db.num_entries();
  std::mt19937_64 rng( cfg.seed );

  permutation current = identity_permutation( num_addresses );
  int64_t current_score = evaluate( db, current );

  search_result result;
  result.best_perm = current;
  result.best_score = current_score;
  result.trace.push_back( { 0, current_score } );
  result.evaluations = 1;

  double const decay = cfg.t_min / cfg.t_max;
  int64_t stall = 0;

  for ( int64_t k = 0; k < cfg.budget; ++k )
  {
    double const temperature = cfg.t_max * std::pow( decay, double( k ) / double( cfg.budget ) );

    uint64_t const i = detail::bounded( rng, num_addresses );
    uint64_t j = detail::bounded( rng, num_addresses - 1 );
    if ( j >= i )
      ++j;
    std::swap( current.mapping[i], current.mapping[j] );

    int64_t const candidate_score = evaluate( db, current );
    ++result.evaluations;

    int64_t const delta = candidate_score - current_score;
    bool accepted = delta <= 0;
    if ( !accepted )
      accepted = detail::canonical( rng ) < std::exp( -double( delta ) / temperature );

    bool const improved = detail::update_best( result, current, candidate_score );

    if ( accepted )
      current_score = candidate_score;
    else
      std::swap( current.mapping[i], current.mapping[j] );

    if ( observer )
      observer( k + 1, candidate_score, accepted );

    result.trace.push_back( { k + 1, result.best_score } );

    stall = improved ? 0 : stall + 1;
    if ( cfg.stall_window > 0 && stall >= cfg.stall_window )
      break;
  }
  return result;
}

/*! \brief Baseline: the identity plus `budget` independent uniform orderings; keeps the best. */
inline search_result random_k( database const& db, search_config const& cfg )
{
  validate( cfg );
  if ( cfg.method != search_method::random )
    throw std::invalid_argument( "config method must be random" );

  uint64_t const num_addresses = db.num_entries();
  std::mt19937_64 rng( cfg.seed );

  search_result result;
  result.best_perm = identity_permutation( num_addresses );
  result.best_score = evaluate( db, result.best_perm );
  result.trace.push_back( { 0, result.best_score } );
  result.evaluations = 1;

  for ( int64_t k = 0; k < cfg.budget; ++k )
  {
    permutation const candidate = uniform_permutation( num_addresses, rng );
    int64_t const score = evaluate( db, candidate );
    ++result.evaluations;
    detail::update_best( result, candidate, score );
    result.trace.push_back( { k + 1, result.best_score } );
  }
  return result;
}

/*! \brief Evaluates every ordering in lexicographic order; N <= 8 unless forced.
 *
 * The trace records improvement points only.  Optional statistics
 * collect the minimum, maximum and mean score over all N! orderings.
 */
inline search_result exhaustive_search( database const& db, score_stats* stats = nullptr,
                                        bool force = false )
{
  uint64_t const num_addresses = db.num_entries();
  if ( !force && num_addresses > 8 )
    throw std::invalid_argument( "exhaustive search is capped at N = 8 (8! orderings); use --force to override" );

  permutation perm = identity_permutation( num_addresses );
  search_result result;
  score_stats local{};
  double sum = 0.0;
  bool first = true;

  do
  {
    int64_t const score = evaluate( db, perm );
    if ( first )
    {
      result.best_perm = perm;
      result.best_score = score;
      result.trace.push_back( { 0, score } );
      local.min_score = local.max_score = score;
      first = false;
    }
    else
    {
      if ( detail::update_best( result, perm, score ) )
        result.trace.push_back( { result.evaluations, score } );
      local.min_score = std::min( local.min_score, score );
      local.max_score = std::max( local.max_score, score );
    }
    sum += double( score );
    ++result.evaluations;
  } while ( std::next_permutation( perm.mapping.begin(), perm.mapping.end() ) );

  local.avg_score = sum / double( result.evaluations );
  if ( stats )
    *stats = local;
  return result;
}

/*! \brief Dispatch on cfg.method. */
inline search_result run_search( database const& db, search_config const& cfg,
                                 score_stats* stats = nullptr, bool force = false )
{
  switch ( cfg.method )
  {
  case search_method::anneal:
    return anneal( db, cfg );
  case search_method::random:
    return random_k( db, cfg );
  default:
    return exhaustive_search( db, stats, force );
  }
}

} /* namespace qromopt */
