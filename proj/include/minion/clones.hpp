#pragma once

#include "predicates.hpp"

namespace minion
{

/*! \brief Where a clone's generating set comes from. */
enum class generator_source : uint8_t
{
  none,     /*!< predicate only */
  quoted,   /*!< generating set taken from the source results */
  dualized, /*!< dual image of a quoted generating set */
  external  /*!< classical fact, used for cross-validation only */
};

struct clone_info
{
  std::string name;
  class_expr predicate;
  std::optional<std::vector<truth_table>> generators;
  generator_source source = generator_source::none;
};

namespace detail
{

inline std::vector<clone_info> build_clones()
{
  using K = prop_kind;
  const class_expr all( K::all ), mono( K::monotone ), sd( K::self_dual );
  const class_expr u( K::sep1, 2 ), w( K::sep0, 2 );
  const class_expr z0( K::val0, 0 ), o1( K::val1, 1 );
  const class_expr e01 = z0 & o1;
  const auto maj = named_function( "maj" );
  const auto gens = []( std::initializer_list<truth_table> g ) { return std::optional<std::vector<truth_table>>( g ); };
  const auto q = generator_source::quoted;
  const auto d = generator_source::dualized;
  const auto none = std::optional<std::vector<truth_table>>{};

  return {
      { "Ic", class_expr( K::projection ), gens( {} ), q },
      { "SM", sd & mono, gens( { maj } ), q },
      { "Sc", sd & e01, none, generator_source::none },
      { "S", sd, gens( { maj, named_function( "not" ) } ), q },
      { "Mc", mono & e01, gens( { maj, named_function( "and" ), named_function( "or" ) } ), q },
      { "M0", mono & z0, none, generator_source::none },
      { "M1", mono & o1, none, generator_source::none },
      { "M", mono, gens( { named_function( "and" ), named_function( "or" ), named_function( "const0" ), named_function( "const1" ) } ), generator_source::external },
      { "McU", mono & u & e01, gens( { maj, named_function( "and" ) } ), q },
      { "MU", mono & u, gens( { maj, named_function( "const0" ) } ), q },
      { "TcU", u & e01, none, generator_source::none },
      { "U", u, gens( { maj, named_function( "nimp" ) } ), q },
      { "McW", mono & w & e01, gens( { maj, named_function( "or" ) } ), d },
      { "MW", mono & w, gens( { maj, named_function( "const1" ) } ), d },
      { "TcW", w & e01, none, generator_source::none },
      { "W", w, gens( { maj, dual( named_function( "nimp" ) ) } ), d },
      { "Tc", e01, none, generator_source::none },
      { "T0", z0, none, generator_source::none },
      { "T1", o1, none, generator_source::none },
      { "Omega", all, none, generator_source::none } };
}

/* covering pairs (lower, upper) of the 20-clone fragment, read off the lattice drawing */
inline const std::vector<std::pair<std::string_view, std::string_view>>& fragment_covers()
{
  static const std::vector<std::pair<std::string_view, std::string_view>> e = {
      { "Ic", "SM" },   { "SM", "Sc" },   { "SM", "McU" }, { "SM", "McW" },  { "Sc", "S" },
      { "Sc", "Tc" },   { "S", "Omega" }, { "McU", "TcU" }, { "McU", "MU" }, { "McU", "Mc" },
      { "MU", "U" },    { "MU", "M0" },   { "TcU", "U" },   { "TcU", "Tc" }, { "U", "T0" },
      { "McW", "TcW" }, { "McW", "MW" },  { "McW", "Mc" },  { "MW", "W" },   { "MW", "M1" },
      { "TcW", "W" },   { "TcW", "Tc" },  { "W", "T1" },    { "Mc", "M0" },  { "Mc", "M1" },
      { "Mc", "Tc" },   { "M0", "M" },    { "M1", "M" },    { "M0", "T0" },  { "M1", "T1" },
      { "M", "Omega" }, { "Tc", "T0" },   { "Tc", "T1" },   { "T0", "Omega" }, { "T1", "Omega" } };
  return e;
}

} // namespace detail

inline const std::vector<clone_info>& clones()
{
  static const std::vector<clone_info> c = detail::build_clones();
  return c;
}

inline constexpr std::size_t clone_count = 20;

class clone_id
{
public:
  constexpr clone_id() = default;
  explicit constexpr clone_id( std::size_t index ) : index_( static_cast<uint8_t>( index ) ) {}

  static std::optional<clone_id> find( std::string_view name )
  {
    const auto& c = clones();
    for ( std::size_t i = 0; i < c.size(); ++i )
      if ( c[i].name == name )
        return clone_id( i );
    return std::nullopt;
  }

  static clone_id from_name( std::string_view name )
  {
    if ( auto c = find( name ) )
      return *c;
    throw std::invalid_argument( "unknown clone name: " + std::string( name ) );
  }

  constexpr std::size_t index() const noexcept { return index_; }
  const clone_info& info() const { return clones()[index_]; }
  const std::string& name() const { return info().name; }
  const class_expr& predicate() const { return info().predicate; }
  const std::optional<std::vector<truth_table>>& generators() const { return info().generators; }

  friend constexpr bool operator==( clone_id, clone_id ) = default;
  friend constexpr auto operator<=>( clone_id, clone_id ) = default;

private:
  uint8_t index_ = 0;
};

inline std::vector<clone_id> all_clones()
{
  std::vector<clone_id> v;
  for ( std::size_t i = 0; i < clones().size(); ++i )
    v.emplace_back( i );
  return v;
}

inline bool clone_member( clone_id c, const truth_table& f )
{
  return c.predicate().holds( f );
}

/*! \brief Cached membership bitmap of clone c at arity m (1..4). */
inline const table_bitmap& clone_bitmap( clone_id c, unsigned m )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "clone_bitmap: arity must be in 1..4" );
  static std::array<std::once_flag, 5> once;
  static std::array<std::vector<table_bitmap>, 5> cache;
  std::call_once( once[m], [m] {
    std::vector<table_bitmap> v( clones().size(), table_bitmap( m ) );
    for_each_table( m, [&]( const truth_table& f ) {
      for ( std::size_t i = 0; i < v.size(); ++i )
        if ( clones()[i].predicate.holds( f ) )
          v[i].set( f.bits() );
    } );
    cache[m] = std::move( v );
  } );
  return cache[m][c.index()];
}

inline fn_set clone_members( clone_id c, unsigned m )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "clone_members: arity must be in 1..4" );
  return clone_bitmap( c, m ).to_fn_set();
}

/*! \brief Arity up to which slices are compared when deciding clone inclusion. */
inline constexpr unsigned clone_order_arity = 3;

class inconsistency_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

namespace detail
{

inline bool fragment_table_leq( std::string_view a, std::string_view b )
{
  /* reflexive-transitive closure of the cover list */
  std::vector<std::string_view> seen{ a }, todo{ a };
  while ( !todo.empty() )
  {
    auto x = todo.back();
    todo.pop_back();
    if ( x == b )
      return true;
    for ( const auto& [lo, hi] : fragment_covers() )
      if ( lo == x && std::find( seen.begin(), seen.end(), hi ) == seen.end() )
      {
        seen.push_back( hi );
        todo.push_back( hi );
      }
  }
  return false;
}

inline bool slice_leq( clone_id c, clone_id d )
{
  for ( unsigned m = 1; m <= clone_order_arity; ++m )
    if ( !clone_bitmap( c, m ).is_subset_of( clone_bitmap( d, m ) ) )
      return false;
  return true;
}

inline const std::vector<std::vector<bool>>& clone_order()
{
  static const auto order = [] {
    const auto n = clones().size();
    std::vector<std::vector<bool>> leq( n, std::vector<bool>( n ) );
    for ( auto c : all_clones() )
      for ( auto d : all_clones() )
      {
        const bool by_slice = slice_leq( c, d );
        const bool by_table = fragment_table_leq( c.name(), d.name() );
        if ( by_slice != by_table )
          throw inconsistency_error( "clone order: slice containment and fragment table disagree on " + c.name() + " <= " + d.name() );
        if ( const auto& g = c.generators() )
        {
          bool by_gens = true;
          for ( const auto& f : *g )
            by_gens = by_gens && clone_member( d, f );
          if ( by_gens != by_slice )
            throw inconsistency_error( "clone order: generators and slices disagree on " + c.name() + " <= " + d.name() );
        }
        leq[c.index()][d.index()] = by_slice;
      }
    return leq;
  }();
  return order;
}

} // namespace detail

/*! \brief Inclusion of clones; decided by slices, cross-checked by generators and the fragment table. */
inline bool clone_leq( clone_id c, clone_id d )
{
  return detail::clone_order()[c.index()][d.index()];
}

/*! \brief Unary members of c, drawn from {const0, const1, id, not}. */
inline fn_set unary_content( clone_id c )
{
  return clone_members( c, 1 );
}

/*! \brief The clone whose members are the duals of c's members. */
inline clone_id clone_dual( clone_id c )
{
  for ( auto d : all_clones() )
  {
    bool same = true;
    for ( unsigned m = 1; m <= clone_order_arity && same; ++m )
    {
      table_bitmap img( m );
      clone_bitmap( c, m ).for_each( [&]( const truth_table& f ) { img.set( dual( f ).bits() ); } );
      same = img == clone_bitmap( d, m );
    }
    if ( same )
      return d;
  }
  throw inconsistency_error( "clone_dual: no dual of " + c.name() + " in the fragment" );
}

} // namespace minion
