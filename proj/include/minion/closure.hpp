#pragma once

#include "clones.hpp"

#include <unordered_set>

namespace minion
{

class budget_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Upper bound on candidate tuples enumerated by right_compose_slice. */
inline constexpr uint64_t compose_budget = 100'000'000;

/*! \brief Largest generator arity accepted by left_close. */
inline constexpr unsigned max_generator_arity = 3;

namespace detail
{

/* set of tables of one arity: bitmap up to arity 4, hash set above */
class table_membership
{
public:
  explicit table_membership( unsigned m )
  {
    if ( m <= 4u )
      bitmap_.emplace( m );
  }

  /* returns true if newly inserted */
  bool insert( const truth_table& f )
  {
    if ( bitmap_ )
    {
      if ( bitmap_->test( f.bits() ) )
        return false;
      bitmap_->set( f.bits() );
      return true;
    }
    return hashed_.insert( f.bits() ).second;
  }

private:
  std::optional<table_bitmap> bitmap_;
  std::unordered_set<uint64_t> hashed_;
};

inline uint64_t saturating_pow( uint64_t base, unsigned exp )
{
  uint64_t r = 1;
  for ( unsigned i = 0; i < exp; ++i )
  {
    if ( base != 0 && r > compose_budget / base + 1u )
      return compose_budget + 1u;
    r *= base;
  }
  return r;
}

} // namespace detail

/*! \brief m-ary slice of F C: every f(g_1..g_n) with f in F and g_i in the m-ary slice of c. */
inline fn_set right_compose_slice( const std::vector<truth_table>& F, clone_id c, unsigned m )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "right_compose_slice: arity must be in 1..4" );
  const auto slice = clone_members( c, m );
  for ( const auto& f : F )
  {
    if ( detail::saturating_pow( slice.size(), f.arity() ) > compose_budget )
      throw budget_error( "right_compose_slice: " + std::to_string( slice.size() ) + "^" + std::to_string( f.arity() ) +
                          " candidate tuples exceed the budget; lower the arity" );
  }
  table_bitmap out( m );
  const auto& g = slice.members();
  for ( const auto& f : F )
  {
    if ( g.empty() )
      break;
    std::vector<std::size_t> idx( f.arity(), 0 );
    std::vector<truth_table> tuple( f.arity(), g[0] );
    while ( true )
    {
      out.set( compose( f, tuple ).bits() );
      std::size_t i = f.arity();
      while ( i > 0 && idx[i - 1] + 1 == g.size() )
      {
        idx[i - 1] = 0;
        tuple[i - 1] = g[0];
        --i;
      }
      if ( i == 0 )
        break;
      tuple[i - 1] = g[++idx[i - 1]];
    }
  }
  return out.to_fn_set();
}

/*! \brief Least superset of S closed under applying each generator pointwise.

  Semi-naive worklist: each new member is combined only with members found
  before it, so every tuple is visited once.
*/
inline fn_set left_close( const fn_set& S, const std::vector<truth_table>& gens )
{
  const unsigned m = S.arity();
  const auto maj = named_function( "maj" );
  for ( const auto& g : gens )
  {
    if ( g.arity() > max_generator_arity )
      throw arity_error( "left_close: generator arity above " + std::to_string( max_generator_arity ) );
  }

  std::vector<truth_table> items( S.begin(), S.end() );
  detail::table_membership seen( m );
  for ( const auto& f : items )
    seen.insert( f );

  auto apply = [&]( const truth_table& g, const std::vector<truth_table>& args ) {
    return g == maj ? maj3( args[0], args[1], args[2] ) : compose( g, args );
  };

  std::vector<truth_table> args;
  for ( std::size_t t = 0; t < items.size(); ++t )
  {
    for ( const auto& g : gens )
    {
      const unsigned k = g.arity();
      /* tuples over items[0..t] in which t occurs; positions in `pin` hold t, others range below t */
      for ( unsigned pin = 1; pin < ( 1u << k ); ++pin )
      {
        std::vector<std::size_t> idx( k, 0 );
        bool empty_range = false;
        for ( unsigned p = 0; p < k; ++p )
        {
          if ( ( pin >> p ) & 1u )
            idx[p] = t;
          else if ( t == 0 )
            empty_range = true;
        }
        if ( empty_range )
          continue;
        while ( true )
        {
          args.clear();
          for ( unsigned p = 0; p < k; ++p )
            args.push_back( items[idx[p]] );
          const auto r = apply( g, args );
          if ( seen.insert( r ) )
            items.push_back( r );
          int p = static_cast<int>( k ) - 1;
          for ( ; p >= 0; --p )
          {
            if ( ( pin >> p ) & 1u )
              continue;
            if ( ++idx[p] < t )
              break;
            idx[p] = 0;
          }
          if ( p < 0 )
            break;
        }
      }
    }
  }
  return fn_set( m, std::move( items ) );
}

/*! \brief m-ary slice of the class generated by F: minors of F closed under majority. */
inline fn_set sm_closure( const std::vector<truth_table>& F, unsigned m )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "sm_closure: arity must be in 1..4" );
  std::vector<truth_table> start;
  for ( const auto& f : F )
  {
    const auto mins = all_minors( f, m );
    start.insert( start.end(), mins.begin(), mins.end() );
  }
  return left_close( fn_set( m, std::move( start ) ), { named_function( "maj" ) } );
}

/*! \brief m-ary slice of c2 (F c1); c2 must carry a generating set. */
inline fn_set stable_closure( const std::vector<truth_table>& F, clone_id c1, clone_id c2, unsigned m )
{
  const auto& gens = c2.generators();
  if ( !gens )
    throw std::invalid_argument( "stable_closure: clone " + c2.name() + " has no generating set" );
  return left_close( right_compose_slice( F, c1, m ), *gens );
}

/*! \brief For every pair of rows i < j, the set of value pairs (f[i], f[j]) over f in S, as a 4-bit mask. */
inline std::vector<uint8_t> pair_projections( const fn_set& S )
{
  const unsigned rows = 1u << S.arity();
  std::vector<uint8_t> proj( rows * rows, 0 );
  for ( const auto& f : S )
    for ( unsigned i = 0; i < rows; ++i )
      for ( unsigned j = i + 1; j < rows; ++j )
        proj[i * rows + j] |= uint8_t( 1u << ( 2u * f[i] + f[j] ) );
  return proj;
}

/*! \brief All tables whose every pair of rows agrees with a pair projection of S; arity <= 4.

  A set equal to its binary closure is majority-closed, since majority preserves binary relations.
*/
inline fn_set binary_closure( const fn_set& S )
{
  const unsigned m = S.arity();
  if ( m > 4u )
    throw arity_error( "binary_closure: arity must be at most 4" );
  const unsigned rows = 1u << m;
  const auto proj = pair_projections( S );
  std::vector<truth_table> out;
  if ( S.empty() )
    return fn_set( m );
  for_each_table( m, [&]( const truth_table& f ) {
    for ( unsigned i = 0; i < rows; ++i )
      for ( unsigned j = i + 1; j < rows; ++j )
        if ( !( ( proj[i * rows + j] >> ( 2u * f[i] + f[j] ) ) & 1u ) )
          return;
    out.push_back( f );
  } );
  return fn_set( m, std::move( out ) );
}

/*! \brief One "n:bits" line per member, in sorted order. */
inline std::string to_lines( const fn_set& S )
{
  std::string s;
  for ( const auto& f : S )
    s += format( f ) + '\n';
  return s;
}

} // namespace minion
