#pragma once

#include "clones.hpp"

namespace minion
{

/*! \brief The roster ordered by inclusion of slices up to a decision arity. */
class class_lattice
{
public:
  class_lattice( unsigned decision_arity, std::vector<std::vector<bool>> leq )
      : arity_( decision_arity ), leq_( std::move( leq ) )
  {
    const auto n = leq_.size();
    upper_.resize( n );
    lower_.resize( n );
    for ( std::size_t a = 0; a < n; ++a )
      for ( std::size_t b = 0; b < n; ++b )
      {
        if ( a == b || !leq_[a][b] )
          continue;
        bool cover = true;
        for ( std::size_t c = 0; c < n && cover; ++c )
          if ( c != a && c != b && leq_[a][c] && leq_[c][b] )
            cover = false;
        if ( cover )
        {
          covers_.emplace_back( class_id( a ), class_id( b ) );
          upper_[a].emplace_back( b );
          lower_[b].emplace_back( a );
        }
      }
  }

  unsigned decision_arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return leq_.size(); }
  bool leq( class_id a, class_id b ) const { return leq_[a.index()][b.index()]; }
  const std::vector<std::vector<bool>>& relation() const noexcept { return leq_; }

  /*! \brief Hasse diagram edges as (lower, upper). */
  const std::vector<std::pair<class_id, class_id>>& covers() const noexcept { return covers_; }
  const std::vector<class_id>& upper_covers( class_id c ) const { return upper_[c.index()]; }
  const std::vector<class_id>& lower_covers( class_id c ) const { return lower_[c.index()]; }

  class_id top() const { return class_id::from_name( "Omega" ); }
  class_id bottom() const { return class_id::from_name( "Empty" ); }

  /*! \brief Roster class whose slices are the intersections of the slices of a and b. */
  class_id meet( class_id a, class_id b ) const
  {
    std::optional<class_id> best;
    for ( auto c : all_classes() )
      if ( leq( c, a ) && leq( c, b ) && ( !best || leq( *best, c ) ) )
        best = c;
    if ( best )
    {
      bool exact = true;
      for ( unsigned m = 1; m <= arity_ && exact; ++m )
        exact = ( class_bitmap( a, m ) & class_bitmap( b, m ) ) == class_bitmap( *best, m );
      for ( auto c : all_classes() )
        if ( exact && leq( c, a ) && leq( c, b ) && !leq( c, *best ) )
          exact = false;
      if ( exact )
        return *best;
    }
    throw inconsistency_error( "meet of " + a.name() + " and " + b.name() + " is not a roster class" );
  }

  /*! \brief Classes other than the top with exactly one upper cover. */
  std::vector<class_id> meet_irreducibles() const
  {
    std::vector<class_id> out;
    for ( auto c : all_classes() )
      if ( c != top() && upper_covers( c ).size() == 1u )
        out.push_back( c );
    return out;
  }

private:
  unsigned arity_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<class_id, class_id>> covers_;
  std::vector<std::vector<class_id>> upper_, lower_;
};

/*! \brief Orders the roster by slice containment for all arities up to m_max (2..4).

  Throws if two classes have identical slices at every arity up to m_max.
*/
inline class_lattice build_lattice( unsigned m_max )
{
  if ( m_max < 2u || m_max > 4u )
    throw arity_error( "build_lattice: decision arity must be in 2..4" );
  const auto n = roster().size();
  std::vector<std::vector<bool>> leq( n, std::vector<bool>( n, true ) );
  for ( auto a : all_classes() )
    for ( auto b : all_classes() )
      for ( unsigned m = 1; m <= m_max; ++m )
        if ( !class_bitmap( a, m ).is_subset_of( class_bitmap( b, m ) ) )
        {
          leq[a.index()][b.index()] = false;
          break;
        }
  for ( std::size_t a = 0; a < n; ++a )
    for ( std::size_t b = a + 1; b < n; ++b )
      if ( leq[a][b] && leq[b][a] )
        throw inconsistency_error( "classes " + class_id( a ).name() + " and " + class_id( b ).name() +
                                   " coincide up to arity " + std::to_string( m_max ) );
  return class_lattice( m_max, std::move( leq ) );
}

/*! \brief Lattice at decision arity 3, built once. */
inline const class_lattice& default_lattice()
{
  static const class_lattice l = build_lattice( 3 );
  return l;
}

enum class automorphism : uint8_t
{
  negation,
  inner_negation,
  duality
};

inline truth_table apply( automorphism a, const truth_table& f )
{
  switch ( a )
  {
  case automorphism::negation: return negate( f );
  case automorphism::inner_negation: return inner_negate( f );
  case automorphism::duality: return dual( f );
  }
  return f;
}

/*! \brief The roster permutation induced by an automorphism, decided on slices up to arity m. */
inline std::vector<class_id> automorphism_image( automorphism a, unsigned m_max = 3 )
{
  std::vector<class_id> perm;
  for ( auto c : all_classes() )
  {
    std::vector<table_bitmap> img;
    for ( unsigned m = 1; m <= m_max; ++m )
    {
      table_bitmap b( m );
      class_bitmap( c, m ).for_each( [&]( const truth_table& f ) { b.set( apply( a, f ).bits() ); } );
      img.push_back( std::move( b ) );
    }
    std::optional<class_id> found;
    for ( auto d : all_classes() )
    {
      bool same = true;
      for ( unsigned m = 1; m <= m_max && same; ++m )
        same = img[m - 1] == class_bitmap( d, m );
      if ( same )
      {
        found = d;
        break;
      }
    }
    if ( !found )
      throw inconsistency_error( "automorphism image of " + c.name() + " is not a roster class" );
    perm.push_back( *found );
  }
  return perm;
}

/*! \brief Images under negation, inner negation and duality, in that order. */
inline std::array<std::vector<class_id>, 3> automorphism_images( unsigned m_max = 3 )
{
  return { automorphism_image( automorphism::negation, m_max ), automorphism_image( automorphism::inner_negation, m_max ),
           automorphism_image( automorphism::duality, m_max ) };
}

inline bool is_order_automorphism( const class_lattice& l, const std::vector<class_id>& perm )
{
  std::vector<bool> hit( perm.size() );
  for ( auto p : perm )
    hit[p.index()] = true;
  if ( std::find( hit.begin(), hit.end(), false ) != hit.end() )
    return false;
  for ( auto a : all_classes() )
    for ( auto b : all_classes() )
      if ( l.leq( a, b ) != l.leq( perm[a.index()], perm[b.index()] ) )
        return false;
  return true;
}

/*! \brief The roster clone with the same slices as c, if c is a clone. */
inline std::optional<clone_id> as_clone( class_id c )
{
  for ( auto k : all_clones() )
  {
    bool same = true;
    for ( unsigned m = 1; m <= clone_order_arity && same; ++m )
      same = clone_bitmap( k, m ) == class_bitmap( c, m );
    if ( same )
      return k;
  }
  return std::nullopt;
}

/*! \brief Hasse diagram in DOT, clones filled. */
inline std::string to_dot( const class_lattice& l )
{
  std::string s = "digraph lattice {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for ( auto c : all_classes() )
  {
    s += "  \"" + c.name() + "\"";
    if ( as_clone( c ) )
      s += " [style=filled, fillcolor=lightblue]";
    s += ";\n";
  }
  for ( const auto& [lo, hi] : l.covers() )
    s += "  \"" + lo.name() + "\" -> \"" + hi.name() + "\";\n";
  s += "}\n";
  return s;
}

} // namespace minion
