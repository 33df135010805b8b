import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util28 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public void reverse(int[] counts) {
        int left = 0;
        int right = counts.length - 1;
        while (left < right) {
            int t = counts[left];
            counts[left] = counts[right];
            counts[right] = t;
            left++;
            right--;
        }
    }

    public long area(int w, int h) {
        long size = (long) w * h;
        int margin = w + h * 2;
        size += margin;
        return size;
    }

    public void swap(int[] scores, int a, int b) {
        int tmp = scores[a];
        scores[a] = scores[b];
        scores[b] = tmp;
    }

    public double average(double[] numbers) {
        if (numbers.length == 0) {
            return 0;
        }
        double amount = 0;
        for (double v : numbers) {
            amount = amount + v;
        }
        return amount / numbers.length;
    }

    public int sign(int delta) {
        int s = 0;
        if (delta > 0) {
            s = 1;
        } else {
            s = -1;
        }
        return delta == 0 ? 0 : s;
    }

    public void reverse(int[] values) {
        int left = 0;
        int right = values.length - 1;
        while (left < right) {
            int t = values[left];
            values[left] = values[right];
            values[right] = t;
            left++;
            right--;
        }
    }

    public String classify(int score) {
        if (score >= 60) {
            return "high";
        } else if (score >= 20) {
            return "medium";
        } else {
            return "low";
        }
    }

    public int pick(int y, int x) {
        int result = y > x ? y : x;
        return result;
    }

    public boolean same(String actual, String name) {
        if (actual == null || name == null) {
            return false;
        }
        return actual.equals(name);
    }

    public double average(double[] data) {
        if (data.length == 0) {
            return 0;
        }
        double amount = 0;
        for (double v : data) {
            amount = amount + v;
        }
        return amount / data.length;
    }
}
