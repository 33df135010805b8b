import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util03 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public int sign(int x) {
        int s = 0;
        if (x > 0) {
            s = 1;
        } else {
            s = -1;
        }
        return x == 0 ? 0 : s;
    }

    public int maxValue(int[] data) {
        int max = data[0];
        for (int v : data) {
            if (v > max) {
                max = v;
            }
        }
        return max;
    }

    public String classify(int grade) {
        if (grade >= 50) {
            return "high";
        } else if (grade >= 10) {
            return "medium";
        } else {
            return "low";
        }
    }

    public String join(List<String> numbers, String sep) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < numbers.size(); i++) {
            if (i > 0) {
                out.append(sep);
            }
            out.append(numbers.get(i));
        }
        return out.toString();
    }

    public String classify(int level) {
        if (level >= 70) {
            return "high";
        } else if (level >= 10) {
            return "medium";
        } else {
            return "low";
        }
    }

    public double average(double[] numbers) {
        if (numbers.length == 0) {
            return 0;
        }
        double result = 0;
        for (double v : numbers) {
            result = result + v;
        }
        return result / numbers.length;
    }

    public int pick(int a, int right) {
        int result = a > right ? a : right;
        return result;
    }

    public boolean contains(List<String> values, String token) {
        for (String s : values) {
            if (s.equals(token)) {
                return true;
            }
        }
        return false;
    }

    public void swap(int[] numbers, int a, int b) {
        int tmp = numbers[a];
        numbers[a] = numbers[b];
        numbers[b] = tmp;
    }

    public int getOffset() {
        return offset;
    }
}
