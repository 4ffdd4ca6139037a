/**
 * APX text codec, mirroring the solver's canonical form:
 * `arg(x).` facts in argument order, then `att(x,y).` facts in attack
 * order, one per line, no trailing newline. Parsing is whitespace
 * insensitive and treats `%`-prefixed lines as comments.
 */

export interface Framework {
  arguments: string[];
  attacks: [string, string][];
}

const ID_RE = /^[A-Za-z0-9_]+$/;

export function isValidId(token: string): boolean {
  return ID_RE.test(token);
}

export class ApxError extends Error {
  constructor(message: string, readonly line?: number) {
    super(line === undefined ? message : `line ${line}: ${message}`);
  }
}

type Token = { text: string; line: number };

const TOKEN_RE = /arg|att|[A-Za-z0-9_]+|[(),.]|\S/g;

function tokenize(text: string): Token[] {
  const tokens: Token[] = [];
  text.split("\n").forEach((rawLine, i) => {
    if (rawLine.trimStart().startsWith("%")) return;
    for (const match of rawLine.matchAll(TOKEN_RE)) {
      tokens.push({ text: match[0], line: i + 1 });
    }
  });
  return tokens;
}

export function parseApx(text: string): Framework {
  const tokens = tokenize(text);
  const args: string[] = [];
  const declared = new Set<string>();
  const attacks: [string, string][] = [];
  const seen = new Set<string>();
  let pos = 0;

  const expect = (symbol: string, line: number): void => {
    const found = tokens[pos];
    if (!found || found.text !== symbol) {
      throw new ApxError(
        `expected '${symbol}', found '${found ? found.text : "end of input"}'`,
        line,
      );
    }
    pos += 1;
  };

  const expectId = (line: number): string => {
    const found = tokens[pos];
    if (!found || !ID_RE.test(found.text)) {
      throw new ApxError(
        `expected an argument id, found '${found ? found.text : "end of input"}'`,
        line,
      );
    }
    pos += 1;
    return found.text;
  };

  while (pos < tokens.length) {
    const head = tokens[pos];
    if (head.text === "arg") {
      pos += 1;
      expect("(", head.line);
      const name = expectId(head.line);
      expect(")", head.line);
      expect(".", head.line);
      if (declared.has(name)) throw new ApxError(`duplicate declaration of argument '${name}'`, head.line);
      declared.add(name);
      args.push(name);
    } else if (head.text === "att") {
      pos += 1;
      expect("(", head.line);
      const src = expectId(head.line);
      expect(",", head.line);
      const dst = expectId(head.line);
      expect(")", head.line);
      expect(".", head.line);
      if (!declared.has(src)) throw new ApxError(`undeclared argument '${src}' in att`, head.line);
      if (!declared.has(dst)) throw new ApxError(`undeclared argument '${dst}' in att`, head.line);
      const key = `${src},${dst}`;
      if (seen.has(key)) throw new ApxError(`duplicate attack (${src},${dst})`, head.line);
      seen.add(key);
      attacks.push([src, dst]);
    } else {
      throw new ApxError(`expected 'arg' or 'att' fact, found '${head.text}'`, head.line);
    }
  }
  return { arguments: args, attacks };
}

export function serializeApx(fw: Framework): string {
  const facts = fw.arguments.map((a) => `arg(${a}).`);
  for (const [s, t] of fw.attacks) facts.push(`att(${s},${t}).`);
  return facts.join("\n");
}

/** Structural equality of two frameworks (order-sensitive, like the solver). */
export function sameFramework(a: Framework, b: Framework): boolean {
  return (
    a.arguments.length === b.arguments.length &&
    a.arguments.every((x, i) => x === b.arguments[i]) &&
    a.attacks.length === b.attacks.length &&
    a.attacks.every((p, i) => p[0] === b.attacks[i][0] && p[1] === b.attacks[i][1])
  );
}
