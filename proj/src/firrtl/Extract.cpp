//===- Extract.cpp - Width constraints of a FIRRTL circuit ---------------===//

#include "firwine/firrtl/Extract.h"
#include "firwine/Normalize.h"

#include <algorithm>
#include <map>

namespace firwine::fir {

namespace {

Ground groundOf(const Type &t) {
  switch (t.kind) {
  case Type::Kind::SInt:
    return Ground::SInt;
  case Type::Kind::Clock:
    return Ground::Clock;
  case Type::Kind::Reset:
    return Ground::Reset;
  case Type::Kind::AsyncReset:
    return Ground::AsyncReset;
  default:
    return Ground::UInt;
  }
}

TypePtr groundType(Ground g) {
  auto t = std::make_shared<Type>();
  switch (g) {
  case Ground::UInt:
    t->kind = Type::Kind::UInt;
    break;
  case Ground::SInt:
    t->kind = Type::Kind::SInt;
    break;
  case Ground::Clock:
    t->kind = Type::Kind::Clock;
    break;
  case Ground::Reset:
    t->kind = Type::Kind::Reset;
    break;
  case Ground::AsyncReset:
    t->kind = Type::Kind::AsyncReset;
    break;
  }
  return t;
}

void flattenInto(const Type &t, std::string suffix, bool flip,
                 std::vector<FlatLeaf> &out) {
  switch (t.kind) {
  case Type::Kind::Vector:
    for (Int i = 0; i < t.length; ++i)
      flattenInto(*t.elem, suffix + "[" + std::to_string(i) + "]", flip, out);
    return;
  case Type::Kind::Bundle:
    for (const auto &f : t.fields)
      flattenInto(*f.type, suffix + "." + f.name, flip != f.flip, out);
    return;
  default:
    out.push_back(FlatLeaf{std::move(suffix), flip, &t});
  }
}

std::string where(const Loc &loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": ";
}

// Width information of one declared ground leaf.
struct Slot {
  Ground kind = Ground::UInt;
  std::optional<Int> known;
  std::optional<VarId> var;

  bool widthless() const { return !known && !var; }
  WidthExpr width() const {
    if (var)
      return WidthExpr::var(*var);
    return WidthExpr::constant(known ? *known : 1);
  }
};

using LeafMap = std::map<std::string, Slot, std::less<>>;

struct ModuleInfo {
  const Module *ast = nullptr;
  LeafMap leaves;
  TypePtr instanceType;
  enum class State { Pending, Active, Done } state = State::Pending;
};

struct Component {
  TypePtr type;
  const ModuleInfo *instance = nullptr;
};

struct ValueLeaf {
  std::string suffix;
  bool flip = false;
  Ground kind = Ground::UInt;
  WidthExpr width = WidthExpr::constant(0);
  const Slot *target = nullptr; // set when the value is a reference
};

class Extractor {
public:
  explicit Extractor(const Circuit &c) {
    for (const auto &m : c.modules) {
      if (modules_.count(m.name))
        throw Error(ErrorKind::Syntax,
                    where(m.loc) + "module '" + m.name + "' defined twice");
      modules_[m.name].ast = &m;
    }
  }

  Extraction run() {
    for (auto &[name, info] : modules_)
      process(info);
    for (auto &[offset, vars] : slots_)
      ex_.slots.push_back(WidthSlot{offset, std::move(vars)});
    return std::move(ex_);
  }

private:
  struct Context {
    ModuleInfo &info;
    std::map<std::string, Component, std::less<>> env;
    const std::string &module() const { return info.ast->name; }
  };

  void process(ModuleInfo &info) {
    if (info.state == ModuleInfo::State::Done)
      return;
    if (info.state == ModuleInfo::State::Active)
      throw Error(ErrorKind::TypeMismatch,
                  where(info.ast->loc) + "module '" + info.ast->name +
                      "' instantiates itself");
    info.state = ModuleInfo::State::Active;
    Context ctx{info, {}};
    auto bundle = std::make_shared<Type>();
    bundle->kind = Type::Kind::Bundle;
    for (const auto &p : info.ast->ports) {
      declare(ctx, p.name, p.type, p.loc);
      bundle->fields.push_back(Field{p.name, p.dir == Direction::Input, p.type});
    }
    info.instanceType = bundle;
    block(ctx, info.ast->body);
    info.state = ModuleInfo::State::Done;
  }

  void declare(Context &ctx, const std::string &name, TypePtr type,
               const Loc &loc) {
    if (ctx.env.count(name))
      throw Error(ErrorKind::Syntax,
                  where(loc) + "'" + name + "' is already declared");
    for (const auto &leaf : flattenType(*type)) {
      std::string path = name + leaf.suffix;
      Slot s;
      s.kind = groundOf(*leaf.ground);
      if (s.kind == Ground::UInt || s.kind == Ground::SInt) {
        if (leaf.ground->width) {
          s.known = *leaf.ground->width;
        } else {
          s.var = ex_.system.variable(ctx.module() + "." + path);
          if (leaf.ground->widthSlot)
            slots_[*leaf.ground->widthSlot].push_back(*s.var);
        }
      }
      ex_.leaves.push_back(Leaf{ctx.module() + "." + path, s.kind, s.known, s.var});
      ctx.info.leaves[path] = s;
    }
    ctx.env[name] = Component{std::move(type), nullptr};
  }

  void block(Context &ctx, const Block &stmts) {
    for (const auto &s : stmts)
      statement(ctx, s);
  }

  void statement(Context &ctx, const Stmt &s) {
    switch (s.kind) {
    case Stmt::Kind::Wire:
      declare(ctx, s.name, s.type, s.loc);
      return;
    case Stmt::Kind::Reg: {
      values(ctx, *s.clock);
      declare(ctx, s.name, s.type, s.loc);
      if (s.init) {
        values(ctx, *s.reset);
        auto ref = std::make_shared<Expr>();
        ref->kind = Expr::Kind::Ref;
        ref->name = s.name;
        ref->loc = s.loc;
        connect(ctx, *ref, *s.init, s.loc);
      }
      return;
    }
    case Stmt::Kind::Inst: {
      auto it = modules_.find(s.module);
      if (it == modules_.end())
        throw Error(ErrorKind::UnboundReference,
                    where(s.loc) + "unknown module '" + s.module + "'");
      process(it->second);
      if (ctx.env.count(s.name))
        throw Error(ErrorKind::Syntax,
                    where(s.loc) + "'" + s.name + "' is already declared");
      ctx.env[s.name] = Component{it->second.instanceType, &it->second};
      return;
    }
    case Stmt::Kind::Node:
      node(ctx, s);
      return;
    case Stmt::Kind::Connect:
      connect(ctx, *s.lhs, *s.rhs, s.loc);
      return;
    case Stmt::Kind::IsInvalid:
      values(ctx, *s.target);
      return;
    case Stmt::Kind::When:
      values(ctx, *s.cond);
      block(ctx, s.thenBlock);
      block(ctx, s.elseBlock);
      return;
    case Stmt::Kind::Skip:
      return;
    }
  }

  void node(Context &ctx, const Stmt &s) {
    if (ctx.env.count(s.name))
      throw Error(ErrorKind::Syntax,
                  where(s.loc) + "'" + s.name + "' is already declared");
    auto leaves = values(ctx, *s.rhs);
    for (const auto &v : leaves) {
      std::string path = s.name + v.suffix;
      Slot slot;
      slot.kind = v.kind;
      if (v.kind == Ground::UInt || v.kind == Ground::SInt) {
        if (!hasVariables(v.width)) {
          slot.known = std::max<Int>(0, evaluate(v.width, {}));
        } else {
          slot.var = ex_.system.variable(ctx.module() + "." + path);
          addConstraint(ex_.system, *slot.var, hoist(ctx, v.width));
        }
      }
      ex_.leaves.push_back(
          Leaf{ctx.module() + "." + path, slot.kind, slot.known, slot.var});
      ctx.info.leaves[path] = slot;
    }
    ctx.env[s.name] = Component{typeOf(ctx, *s.rhs), nullptr};
  }

  void connect(Context &ctx, const Expr &lhs, const Expr &rhs, const Loc &loc) {
    auto sinks = values(ctx, lhs);
    auto sources = values(ctx, rhs);
    if (sinks.size() != sources.size())
      throw Error(ErrorKind::TypeMismatch,
                  where(loc) + "connect between incompatible types");
    for (std::size_t i = 0; i < sinks.size(); ++i) {
      const ValueLeaf &a = sinks[i], &b = sources[i];
      if (a.suffix != b.suffix || a.flip != b.flip)
        throw Error(ErrorKind::TypeMismatch,
                    where(loc) + "connect between incompatible types");
      bool numeric = [](Ground g) {
        return g == Ground::UInt || g == Ground::SInt;
      }(a.kind);
      if (numeric && (b.kind == Ground::UInt || b.kind == Ground::SInt) &&
          a.kind != b.kind)
        throw Error(ErrorKind::TypeMismatch,
                    where(loc) + "connect between UInt and SInt");
      if (!a.flip) {
        if (!a.target)
          throw Error(ErrorKind::TypeMismatch,
                      where(loc) + "connect target is not a reference");
        constrain(ctx, *a.target, b.width, loc);
      } else {
        if (!b.target)
          throw Error(ErrorKind::TypeMismatch,
                      where(loc) + "flipped field needs a reference source");
        constrain(ctx, *b.target, a.width, loc);
      }
    }
  }

  void constrain(Context &ctx, const Slot &sink, const WidthExpr &w,
                 const Loc &loc) {
    if (sink.widthless())
      return;
    if (sink.var) {
      addConstraint(ex_.system, *sink.var, hoist(ctx, w));
      return;
    }
    ex_.checks.push_back(ConstantCheck{
        *sink.known, w,
        ctx.module() + ":" + std::to_string(loc.line) + ":" +
            std::to_string(loc.col) + ": sink of width " +
            std::to_string(*sink.known)});
  }

  // 2^w with a compound w is expressed through an auxiliary variable
  // aux >= w, so that only 2^variable and 2^constant remain.
  WidthExpr hoist(Context &ctx, const WidthExpr &e) {
    switch (e.kind()) {
    case WidthExpr::Kind::Var:
    case WidthExpr::Kind::Const:
      return e;
    case WidthExpr::Kind::Exp2: {
      const WidthExpr &arg = e.lhs();
      if (arg.kind() == WidthExpr::Kind::Var ||
          arg.kind() == WidthExpr::Kind::Const)
        return e;
      if (!hasVariables(arg))
        return WidthExpr::exp2(WidthExpr::constant(evaluate(arg, {})));
      VarId aux = ex_.system.variable(ctx.module() + ".$shift" +
                                      std::to_string(shiftCounter_++));
      addConstraint(ex_.system, aux, hoist(ctx, arg));
      return WidthExpr::exp2(WidthExpr::var(aux));
    }
    case WidthExpr::Kind::Add:
      return WidthExpr::add(hoist(ctx, e.lhs()), hoist(ctx, e.rhs()));
    case WidthExpr::Kind::Min:
      return WidthExpr::min(hoist(ctx, e.lhs()), hoist(ctx, e.rhs()));
    case WidthExpr::Kind::Max:
      return WidthExpr::max(hoist(ctx, e.lhs()), hoist(ctx, e.rhs()));
    }
    return e;
  }

  struct Resolved {
    const Type *type = nullptr;
    TypePtr owner;            // keeps type alive
    const LeafMap *table = nullptr;
    std::string path;         // key prefix inside table
  };

  Resolved resolve(Context &ctx, const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::Ref: {
      auto it = ctx.env.find(e.name);
      if (it == ctx.env.end())
        throw Error(ErrorKind::UnboundReference,
                    where(e.loc) + "unknown name '" + e.name + "'");
      const Component &c = it->second;
      if (c.instance)
        return Resolved{c.type.get(), c.type, &c.instance->leaves, ""};
      return Resolved{c.type.get(), c.type, &ctx.info.leaves, e.name};
    }
    case Expr::Kind::SubField: {
      Resolved r = resolve(ctx, *e.args[0]);
      if (r.type->kind != Type::Kind::Bundle)
        throw Error(ErrorKind::TypeMismatch,
                    where(e.loc) + "'." + e.name + "' applied to a non-bundle");
      for (const auto &f : r.type->fields)
        if (f.name == e.name) {
          r.type = f.type.get();
          r.path = r.path.empty() ? f.name : r.path + "." + f.name;
          return r;
        }
      throw Error(ErrorKind::UnboundReference,
                  where(e.loc) + "no field '" + e.name + "'");
    }
    case Expr::Kind::SubIndex: {
      Resolved r = resolve(ctx, *e.args[0]);
      if (r.type->kind != Type::Kind::Vector)
        throw Error(ErrorKind::TypeMismatch,
                    where(e.loc) + "index applied to a non-vector");
      if (e.index < 0 || e.index >= r.type->length)
        throw Error(ErrorKind::TypeMismatch,
                    where(e.loc) + "index " + std::to_string(e.index) +
                        " out of range");
      r.path += "[" + std::to_string(e.index) + "]";
      r.type = r.type->elem.get();
      return r;
    }
    default:
      throw Error(ErrorKind::Internal, "not a reference");
    }
  }

  TypePtr typeOf(Context &ctx, const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::Ref:
    case Expr::Kind::SubField:
    case Expr::Kind::SubIndex: {
      Resolved r = resolve(ctx, e);
      // Aliasing constructor: shares ownership with the root type.
      return TypePtr(r.owner, r.type);
    }
    case Expr::Kind::Mux:
      return typeOf(ctx, *e.args.at(1));
    case Expr::Kind::ValidIf:
      return typeOf(ctx, *e.args.at(1));
    default: {
      auto leaves = values(ctx, e);
      return groundType(leaves.front().kind);
    }
    }
  }

  TypedWidth ground(Context &ctx, const Expr &e) {
    auto leaves = values(ctx, e);
    if (leaves.size() != 1 || !leaves.front().suffix.empty())
      throw Error(ErrorKind::TypeMismatch,
                  where(e.loc) + "operand must have a ground type");
    return TypedWidth{leaves.front().kind, leaves.front().width};
  }

  std::vector<ValueLeaf> values(Context &ctx, const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::UIntLit:
    case Expr::Kind::SIntLit: {
      Ground g = e.kind == Expr::Kind::UIntLit ? Ground::UInt : Ground::SInt;
      return {ValueLeaf{"", false, g,
                        WidthExpr::constant(e.width ? *e.width : e.minWidth),
                        nullptr}};
    }
    case Expr::Kind::Ref:
    case Expr::Kind::SubField:
    case Expr::Kind::SubIndex: {
      Resolved r = resolve(ctx, e);
      std::vector<ValueLeaf> out;
      for (const auto &leaf : flattenType(*r.type)) {
        std::string key = r.path + leaf.suffix;
        if (!key.empty() && key.front() == '.')
          key.erase(0, 1);
        auto it = r.table->find(key);
        if (it == r.table->end())
          throw Error(ErrorKind::Internal, "leaf '" + key + "' not declared");
        out.push_back(ValueLeaf{leaf.suffix, leaf.flip, it->second.kind,
                                it->second.width(), &it->second});
      }
      return out;
    }
    case Expr::Kind::Mux: {
      if (e.args.size() != 3 || !e.ints.empty())
        throw Error(ErrorKind::TypeMismatch,
                    where(e.loc) + "mux takes three operands");
      ground(ctx, *e.args[0]);
      auto a = values(ctx, *e.args[1]);
      auto b = values(ctx, *e.args[2]);
      if (a.size() != b.size())
        throw Error(ErrorKind::TypeMismatch,
                    where(e.loc) + "mux operands have different types");
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].suffix != b[i].suffix)
          throw Error(ErrorKind::TypeMismatch,
                      where(e.loc) + "mux operands have different types");
        a[i].width = muxWidth({a[i].kind, a[i].width}, {b[i].kind, b[i].width})
                         .width;
        a[i].target = nullptr;
      }
      return a;
    }
    case Expr::Kind::ValidIf: {
      if (e.args.size() != 2 || !e.ints.empty())
        throw Error(ErrorKind::TypeMismatch,
                    where(e.loc) + "validif takes two operands");
      ground(ctx, *e.args[0]);
      auto a = values(ctx, *e.args[1]);
      for (auto &v : a)
        v.target = nullptr;
      return a;
    }
    case Expr::Kind::PrimOp: {
      std::vector<TypedWidth> args;
      for (const auto &a : e.args)
        args.push_back(ground(ctx, *a));
      try {
        TypedWidth r = primOpWidth(e.name, args, e.ints);
        return {ValueLeaf{"", false, r.kind, r.width, nullptr}};
      } catch (const Error &err) {
        throw Error(err.kind(), where(e.loc) + err.what());
      }
    }
    }
    throw Error(ErrorKind::Internal, "bad expression");
  }

  Extraction ex_;
  std::map<std::string, ModuleInfo, std::less<>> modules_;
  std::map<std::size_t, std::vector<VarId>> slots_;
  int shiftCounter_ = 0;
};

} // namespace

std::vector<FlatLeaf> flattenType(const Type &type) {
  std::vector<FlatLeaf> out;
  flattenInto(type, "", false, out);
  return out;
}

Extraction extractConstraints(const Circuit &circuit) {
  return Extractor(circuit).run();
}

std::string applySolution(std::string_view source, const Extraction &ex,
                          std::span<const Int> widths) {
  std::string out;
  std::size_t pos = 0;
  for (const auto &slot : ex.slots) {
    Int w = 0;
    for (VarId v : slot.vars)
      w = std::max(w, widths[v.index]);
    out.append(source.substr(pos, slot.offset - pos));
    out += "<" + std::to_string(w) + ">";
    pos = slot.offset;
  }
  out.append(source.substr(pos));
  return out;
}

} // namespace firwine::fir
